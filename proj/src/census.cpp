#include "modalkit/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "modalkit/errors.hpp"
#include "modalkit/rational.hpp"
#include "modalkit/splitmix64.hpp"

namespace modalkit {

std::string_view to_string(StructureClass c) {
    switch (c) {
        case StructureClass::relation: return "relation";
        case StructureClass::strict_order: return "strict-order";
        case StructureClass::partial_order: return "partial-order";
        case StructureClass::equivalence: return "equivalence";
    }
    return "?";
}

std::optional<StructureClass> structure_class_from_string(std::string_view s) {
    using SC = StructureClass;
    for (SC c : {SC::relation, SC::strict_order, SC::partial_order, SC::equivalence})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

namespace {

RelationClass property_of(StructureClass c) {
    switch (c) {
        case StructureClass::strict_order: return RelationClass::strict_partial_order;
        case StructureClass::partial_order: return RelationClass::partial_order;
        case StructureClass::equivalence: return RelationClass::equivalence;
        case StructureClass::relation: break;
    }
    throw std::logic_error("no single property for this class");
}

}  // namespace

void for_each_labeled(int n, StructureClass c, std::uint64_t budget,
                      const std::function<void(const Frame&)>& visit) {
    if (n < 0) throw input_error("census: negative n");
    const bool pin_diagonal =
        c == StructureClass::strict_order || c == StructureClass::partial_order;
    // free cells: all n^2, or the off-diagonal ones for order classes
    std::vector<std::pair<int, int>> cells;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (!pin_diagonal || u != v) cells.emplace_back(u, v);

    if (cells.size() >= 63 || (1ull << cells.size()) > budget)
        throw limit_error("census scan needs 2^" + std::to_string(cells.size()) +
                          " candidates, budget is " + std::to_string(budget));

    Frame f(n);
    if (c == StructureClass::partial_order)
        for (int u = 0; u < n; ++u) f.set(u, u);

    const std::uint64_t count = 1ull << cells.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            f.set(cells[i].first, cells[i].second, (mask >> i) & 1u);
        if (c == StructureClass::relation || has_property(f, property_of(c))) visit(f);
    }
}

BigNat count_labeled(int n, StructureClass c, std::uint64_t budget) {
    if (n < 0) throw input_error("census: negative n");
    if (c == StructureClass::relation)
        return BigNat::pow2((std::uint64_t)n * (std::uint64_t)n);
    BigNat total;
    for_each_labeled(n, c, budget, [&](const Frame&) { total += BigNat(1); });
    return total;
}

namespace {

BigNat count_canonical_classes(int n, StructureClass c, std::uint64_t budget, int key_cap) {
    std::set<CanonicalKey> keys;
    for_each_labeled(n, c, budget, [&](const Frame& f) { keys.insert(canonical_key(f, key_cap)); });
    return BigNat((std::uint64_t)keys.size());
}

}  // namespace

BigNat count_unlabeled(int n, StructureClass c, std::uint64_t budget, int key_cap) {
    if (n < 0) throw input_error("census: negative n");
    if (c != StructureClass::equivalence) return count_canonical_classes(n, c, budget, key_cap);

    // bijection route: classes of equivalences correspond to partitions of n
    if (n > key_cap)
        throw limit_error("unlabeled equivalence census capped at n = " +
                          std::to_string(key_cap));
    const BigNat via_partitions((std::uint64_t)integer_partitions(n).size());
    // cross-check by canonicalization when the scan is affordable
    if (n >= 1 && n <= 5 && (std::uint64_t)n * (std::uint64_t)n < 63 &&
        (1ull << ((std::uint64_t)n * n)) <= budget) {
        const BigNat scanned = count_canonical_classes(n, c, budget, key_cap);
        if (scanned != via_partitions)
            throw consistency_error(
                "equivalence census disagreement at n = " + std::to_string(n) + ": partitions say " +
                via_partitions.to_decimal() + ", canonicalization says " + scanned.to_decimal());
    }
    return via_partitions;
}

Frame partition_to_frame(const IntegerPartition& p) {
    if (p.parts.empty()) throw input_error("partition_to_frame: empty partition");
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] < 1) throw input_error("partition_to_frame: parts must be positive");
        if (i > 0 && p.parts[i] > p.parts[i - 1])
            throw input_error("partition_to_frame: parts must be non-increasing");
    }
    Frame f(p.total());
    int start = 0;
    for (int part : p.parts) {
        for (int u = start; u < start + part; ++u)
            for (int v = start; v < start + part; ++v) f.set(u, v);
        start += part;
    }
    return f;
}

IntegerPartition frame_to_partition(const Frame& f) {
    if (!has_property(f, RelationClass::equivalence))
        throw input_error("frame_to_partition: relation is not an equivalence");
    std::vector<int> sizes;
    std::vector<bool> seen((std::size_t)f.worlds(), false);
    for (int u = 0; u < f.worlds(); ++u) {
        if (seen[u]) continue;
        int size = 0;
        for (int v = 0; v < f.worlds(); ++v)
            if (f.get(u, v)) {
                seen[v] = true;
                ++size;
            }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return {sizes};
}

BigNat a_exact(int n) {
    if (n < 1) throw input_error("a_exact: n must be at least 1");
    Rational total;
    for (const auto& partition : integer_partitions(n)) {
        const auto mult = partition.multiplicities();
        std::uint64_t exponent = 0;
        for (auto [i, si] : mult)
            for (auto [j, sj] : mult)
                exponent += (std::uint64_t)std::gcd(i, j) * (std::uint64_t)si * (std::uint64_t)sj;
        BigNat denom(1);
        for (auto [k, sk] : mult)
            denom *= BigNat((std::uint64_t)k).pow((std::uint64_t)sk) *
                     BigNat::factorial((unsigned)sk);
        total += Rational(BigNat::pow2(exponent), denom);
    }
    if (!total.is_integer())
        throw consistency_error("a_exact: cycle-index sum did not reduce to an integer at n = " +
                                std::to_string(n));
    return total.num();
}

SampleEstimate sample_s5_probability(int n, std::uint64_t trials, std::uint64_t seed) {
    if (n < 0) throw input_error("sample: negative n");
    if (trials < 1) throw input_error("sample: need at least one trial");
    SplitMix64 rng(seed);
    SampleEstimate est;
    est.trials = trials;
    Frame f(n);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        // fresh words each trial; cells take bits row-major, MSB first
        std::uint64_t word = 0;
        int bits_left = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (bits_left == 0) {
                    word = rng.next();
                    bits_left = 64;
                }
                f.set(u, v, (word >> 63) & 1u);
                word <<= 1;
                --bits_left;
            }
        if (has_property(f, RelationClass::equivalence)) ++est.hits;
    }
    est.ratio = trials == 0 ? 0.0 : (double)est.hits / (double)trials;
    return est;
}

}  // namespace modalkit
