#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "modalkit/bignat.hpp"
#include "modalkit/partitions.hpp"
#include "modalkit/relations.hpp"

namespace modalkit {

enum class StructureClass { relation, strict_order, partial_order, equivalence };

std::string_view to_string(StructureClass c);
std::optional<StructureClass> structure_class_from_string(std::string_view s);

inline constexpr std::uint64_t default_scan_budget = 1ull << 24;

// Visits every labeled structure of the class on {0..n-1}. Orders pin the
// diagonal and scan 2^(n(n-1)) candidates; the other classes scan the full
// 2^(n^2). The scan size must not exceed the budget.
void for_each_labeled(int n, StructureClass c, std::uint64_t budget,
                      const std::function<void(const Frame&)>& visit);

// Exact labeled count; `relation` uses the closed form 2^(n^2) for any n,
// the rest count a scan.
BigNat count_labeled(int n, StructureClass c, std::uint64_t budget = default_scan_budget);

// Number of isomorphism classes: canonical-key classes over the labeled
// scan, except `equivalence`, which walks the partition bijection (n is
// then capped by key_cap rather than the budget) and cross-checks the scan
// route when it fits (n <= 5 and within budget), failing loudly on
// disagreement.
BigNat count_unlabeled(int n, StructureClass c, std::uint64_t budget = default_scan_budget,
                       int key_cap = default_canonical_cap);

// Equivalence frame whose blocks are consecutive index ranges sized by the
// partition's parts.
Frame partition_to_frame(const IntegerPartition& p);
// Inverse: block sizes of an equivalence relation, non-increasing.
IntegerPartition frame_to_partition(const Frame& f);

// Isomorphism classes of binary relations on n points: the cycle-index sum
// 2^(sum gcd(i,j) s_i s_j) / prod(k^s_k s_k!) over partitions of n, summed
// in exact rationals; a non-integral total is an internal error.
BigNat a_exact(int n);

struct SampleEstimate {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double ratio = 0.0;
};

// Draws uniform labeled relations (independent fair coin per ordered pair,
// SplitMix64 bits consumed row-major, MSB first, fresh words per trial) and
// counts equivalences. Bit-reproducible for fixed (n, trials, seed).
SampleEstimate sample_s5_probability(int n, std::uint64_t trials, std::uint64_t seed);

}  // namespace modalkit
