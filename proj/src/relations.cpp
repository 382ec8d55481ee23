#include "modalkit/relations.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "modalkit/errors.hpp"

namespace modalkit {

Frame::Frame(int n) : n_(n), stride_((n + 63) / 64), bits_((std::size_t)n * stride_, 0) {
    if (n < 0) throw input_error("frame: negative world count");
}

Frame Frame::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Frame f(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for " + std::to_string(n) + " worlds");
        f.set(u, v);
    }
    return f;
}

Frame Frame::identity(int n) {
    Frame f(n);
    for (int u = 0; u < n; ++u) f.set(u, u);
    return f;
}

Frame Frame::complete(int n) {
    Frame f(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) f.set(u, v);
    return f;
}

void Frame::set(int u, int v, bool value) {
    auto& word = bits_[(std::size_t)u * stride_ + (std::size_t)v / 64];
    const std::uint64_t mask = 1ull << (v % 64);
    if (value)
        word |= mask;
    else
        word &= ~mask;
}

bool Frame::row_empty(int u) const {
    for (auto w : row(u))
        if (w) return false;
    return true;
}

bool Frame::row_subset(int u, int v) const {
    auto a = row(u), b = row(v);
    for (int i = 0; i < stride_; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

void Frame::row_or(int dst, int src) {
    auto* d = bits_.data() + (std::size_t)dst * stride_;
    const auto* s = bits_.data() + (std::size_t)src * stride_;
    for (int i = 0; i < stride_; ++i) d[i] |= s[i];
}

void Frame::row_or_from(int dst, const Frame& src, int src_row) {
    auto* d = bits_.data() + (std::size_t)dst * stride_;
    const auto* s = src.bits_.data() + (std::size_t)src_row * src.stride_;
    for (int i = 0; i < stride_; ++i) d[i] |= s[i];
}

std::vector<std::pair<int, int>> Frame::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (get(u, v)) out.emplace_back(u, v);
    return out;
}

std::size_t Frame::edge_count() const {
    std::size_t total = 0;
    for (auto w : bits_) total += (std::size_t)std::popcount(w);
    return total;
}

namespace {

bool is_reflexive(const Frame& f) {
    for (int u = 0; u < f.worlds(); ++u)
        if (!f.get(u, u)) return false;
    return true;
}

bool is_antireflexive(const Frame& f) {
    for (int u = 0; u < f.worlds(); ++u)
        if (f.get(u, u)) return false;
    return true;
}

bool is_symmetric(const Frame& f) {
    for (int u = 0; u < f.worlds(); ++u)
        for (int v = u + 1; v < f.worlds(); ++v)
            if (f.get(u, v) != f.get(v, u)) return false;
    return true;
}

bool is_antisymmetric(const Frame& f) {
    for (int u = 0; u < f.worlds(); ++u)
        for (int v = u + 1; v < f.worlds(); ++v)
            if (f.get(u, v) && f.get(v, u)) return false;
    return true;
}

// uRv ∧ vRw → uRw, i.e. every successor's row is contained in ours
bool is_transitive(const Frame& f) {
    for (int u = 0; u < f.worlds(); ++u)
        for (int v = 0; v < f.worlds(); ++v)
            if (f.get(u, v) && !f.row_subset(v, u)) return false;
    return true;
}

// wRu ∧ wRv → uRv: every successor of w must reach all successors of w
bool is_euclidean(const Frame& f) {
    for (int w = 0; w < f.worlds(); ++w)
        for (int u = 0; u < f.worlds(); ++u)
            if (f.get(w, u) && !f.row_subset(w, u)) return false;
    return true;
}

}  // namespace

bool has_property(const Frame& f, RelationClass c) {
    switch (c) {
        case RelationClass::reflexive: return is_reflexive(f);
        case RelationClass::antireflexive: return is_antireflexive(f);
        case RelationClass::symmetric: return is_symmetric(f);
        case RelationClass::antisymmetric: return is_antisymmetric(f);
        case RelationClass::transitive: return is_transitive(f);
        case RelationClass::euclidean: return is_euclidean(f);
        case RelationClass::equivalence:
            return is_reflexive(f) && is_symmetric(f) && is_transitive(f);
        case RelationClass::strict_partial_order:
            return is_antireflexive(f) && is_antisymmetric(f) && is_transitive(f);
        case RelationClass::partial_order:
            return is_reflexive(f) && is_antisymmetric(f) && is_transitive(f);
    }
    return false;
}

Frame compose(const Frame& a, const Frame& b) {
    if (a.worlds() != b.worlds()) throw input_error("compose: world counts differ");
    const int n = a.worlds();
    Frame out(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (a.get(u, v)) out.row_or_from(u, b, v);
    return out;
}

Frame relation_power(const Frame& f, int m) {
    if (m < 0) throw input_error("relation power: negative exponent");
    Frame out = Frame::identity(f.worlds());
    for (int step = 0; step < m; ++step) out = compose(out, f);
    return out;
}

Frame transitive_closure(Frame f) {
    const int n = f.worlds();
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            if (f.get(u, k)) f.row_or(u, k);
    return f;
}

CanonicalKey canonical_key(const Frame& f, int cap) {
    const int n = f.worlds();
    if (n > cap)
        throw limit_error("canonical_key: " + std::to_string(n) +
                          " worlds exceeds the cap of " + std::to_string(cap));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const std::size_t nbytes = ((std::size_t)n * n + 7) / 8;
    std::vector<std::uint8_t> best, cur;
    do {
        cur.assign(nbytes, 0);
        std::size_t bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j, ++bit)
                if (f.get(perm[i], perm[j])) cur[bit / 8] |= (std::uint8_t)(0x80u >> (bit % 8));
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n == 0) best.clear();
    CanonicalKey key;
    key.bytes.reserve(1 + nbytes);
    key.bytes.push_back((std::uint8_t)n);
    key.bytes.insert(key.bytes.end(), best.begin(), best.end());
    return key;
}

Frame frame_from_key(const CanonicalKey& key) {
    if (key.bytes.empty()) throw input_error("empty canonical key");
    const int n = key.bytes[0];
    Frame f(n);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++bit)
            if (key.bytes[1 + bit / 8] & (0x80u >> (bit % 8))) f.set(i, j);
    return f;
}

std::string_view to_string(RelationClass c) {
    switch (c) {
        case RelationClass::reflexive: return "reflexive";
        case RelationClass::antireflexive: return "antireflexive";
        case RelationClass::symmetric: return "symmetric";
        case RelationClass::antisymmetric: return "antisymmetric";
        case RelationClass::transitive: return "transitive";
        case RelationClass::euclidean: return "euclidean";
        case RelationClass::equivalence: return "equivalence";
        case RelationClass::strict_partial_order: return "strict-partial-order";
        case RelationClass::partial_order: return "partial-order";
    }
    return "?";
}

std::optional<RelationClass> relation_class_from_string(std::string_view s) {
    using RC = RelationClass;
    for (RC c : {RC::reflexive, RC::antireflexive, RC::symmetric, RC::antisymmetric,
                 RC::transitive, RC::euclidean, RC::equivalence, RC::strict_partial_order,
                 RC::partial_order})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

}  // namespace modalkit
