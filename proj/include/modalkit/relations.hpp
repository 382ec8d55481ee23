#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace modalkit {

// Finite binary relation on worlds {0..n-1}, stored as an n x n bit matrix
// with one packed 64-bit row stride. Doubles as the temporal frame <T,<>
// and the modal frame <W,R>.
class Frame {
public:
    Frame() = default;
    explicit Frame(int n);

    static Frame from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Frame identity(int n);
    static Frame complete(int n);

    int worlds() const { return n_; }
    bool get(int u, int v) const {
        return (bits_[(std::size_t)u * stride_ + (std::size_t)v / 64] >> (v % 64)) & 1u;
    }
    void set(int u, int v, bool value = true);

    // row(u) as a word span; trailing bits beyond n are always zero
    std::span<const std::uint64_t> row(int u) const {
        return {bits_.data() + (std::size_t)u * stride_, (std::size_t)stride_};
    }
    bool row_empty(int u) const;
    bool row_subset(int u, int v) const;  // row(u) ⊆ row(v)
    void row_or(int dst, int src);        // row(dst) |= row(src)
    void row_or_from(int dst, const Frame& src, int src_row);

    std::vector<std::pair<int, int>> edges() const;  // lexicographically sorted
    std::size_t edge_count() const;

    bool operator==(const Frame&) const = default;

private:
    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

enum class RelationClass {
    reflexive,
    antireflexive,
    symmetric,
    antisymmetric,
    transitive,
    euclidean,
    equivalence,            // reflexive ∧ symmetric ∧ transitive
    strict_partial_order,   // antireflexive ∧ antisymmetric ∧ transitive
    partial_order,          // reflexive ∧ antisymmetric ∧ transitive
};

bool has_property(const Frame& f, RelationClass c);

// R^m: identity for m = 0, R for m = 1, m-fold composition otherwise.
Frame relation_power(const Frame& f, int m);
Frame compose(const Frame& a, const Frame& b);
Frame transitive_closure(Frame f);

// Byte string identifying the isomorphism class: world count, then the
// lexicographically minimal row-major matrix over all relabelings, packed
// MSB-first. Equal keys <=> isomorphic frames.
struct CanonicalKey {
    std::vector<std::uint8_t> bytes;
    auto operator<=>(const CanonicalKey&) const = default;
};

inline constexpr int default_canonical_cap = 8;

CanonicalKey canonical_key(const Frame& f, int cap = default_canonical_cap);
// Decodes a key back into its minimal representative frame.
Frame frame_from_key(const CanonicalKey& key);

std::string_view to_string(RelationClass c);
std::optional<RelationClass> relation_class_from_string(std::string_view s);

}  // namespace modalkit
