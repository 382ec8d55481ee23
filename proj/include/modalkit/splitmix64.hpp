#pragma once

#include <cstdint>

namespace modalkit {

// SplitMix64: state advances by 0x9E3779B97F4A7C15, output is the standard
// 64-bit finalizer. Fixed here (rather than <random>) so samples are
// bit-reproducible across platforms and languages.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound); used by test generators, not by
    // the documented sampling interface.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

}  // namespace modalkit
