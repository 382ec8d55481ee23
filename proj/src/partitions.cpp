#include "modalkit/partitions.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "modalkit/census.hpp"
#include "modalkit/errors.hpp"

namespace modalkit {

int IntegerPartition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<std::pair<int, int>> IntegerPartition::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::vector<IntegerPartition> integer_partitions(int n) {
    if (n < 0) throw input_error("integer_partitions: negative n");
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    // descending first parts give reverse-lexicographic order
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.push_back({cur});
            return;
        }
        for (int part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, left - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

BigNat p_exact(int n) {
    if (n < 0) throw input_error("p_exact: negative n");
    static std::vector<BigNat> memo{BigNat(1)};  // p(0) = 1
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    while ((int)memo.size() <= n) {
        const int m = (int)memo.size();
        BigNat plus, minus;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            BigNat& acc = (k % 2 == 1) ? plus : minus;
            acc += memo[m - g1];
            if (g2 <= m) acc += memo[m - g2];
        }
        memo.push_back(plus - minus);
    }
    return memo[n];
}

BigNat bell(int n) {
    if (n < 0) throw input_error("bell: negative n");
    // Bell triangle: row starts with the previous row's last entry
    std::vector<BigNat> row{BigNat(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigNat> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const BigNat& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

Rational dedekind_sum(std::int64_t h, std::int64_t k) {
    if (k < 1) throw input_error("dedekind_sum: k must be at least 1");
    // h beyond k is accepted: the sum only sees h mod k, and the
    // reciprocity identity needs s(k,h) with k > h
    if (h < 1) throw input_error("dedekind_sum: h must be at least 1");
    // term j equals j(2(hj mod k) - k) / (2k^2); accumulate the two signs
    BigNat pos, neg;
    for (std::int64_t j = 1; j < k; ++j) {
        const std::int64_t r = (__int128)h * j % k;
        const std::int64_t t = 2 * r - k;
        if (t >= 0)
            pos += BigNat((std::uint64_t)j) * BigNat((std::uint64_t)t);
        else
            neg += BigNat((std::uint64_t)j) * BigNat((std::uint64_t)(-t));
    }
    const BigNat den = BigNat((std::uint64_t)k) * BigNat((std::uint64_t)k) * BigNat(2);
    if (pos >= neg) return Rational(pos - neg, den);
    return Rational(neg - pos, den, true);
}

double rademacher_sinh_term(double n, int k) {
    const double x = n - 1.0 / 24.0;
    const double c = (std::numbers::pi / k) * std::sqrt(2.0 / 3.0);
    return std::sinh(c * std::sqrt(x)) / std::sqrt(x);
}

double rademacher_sinh_term_derivative(double n, int k) {
    const double x = n - 1.0 / 24.0;
    const double c = (std::numbers::pi / k) * std::sqrt(2.0 / 3.0);
    const double sx = std::sqrt(x);
    return c * std::cosh(c * sx) / (2.0 * x) - std::sinh(c * sx) / (2.0 * x * sx);
}

int default_rademacher_terms(int n) {
    return (int)std::ceil(3.0 * std::sqrt((double)n)) + 5;
}

double rademacher_p(int n, int terms) {
    if (n < 1) throw input_error("rademacher_p: n must be at least 1");
    if (terms < 1) throw input_error("rademacher_p: need at least one series term");
    if (n > 200)
        throw limit_error("rademacher_p: double precision cannot round p(n) past n = 200");

    // s(h,k) is n-independent; keep the exact values across calls
    static std::map<std::pair<int, int>, Rational> dedekind_cache;
    static std::mutex cache_mutex;

    double total_re = 0.0, total_im = 0.0;
    for (int k = 1; k <= terms; ++k) {
        double sum_re = 0.0, sum_im = 0.0;
        for (int h = 1; h <= k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            Rational s;
            {
                std::lock_guard<std::mutex> lock(cache_mutex);
                auto [it, inserted] = dedekind_cache.try_emplace({h, k});
                if (inserted) it->second = dedekind_sum(h, k);
                s = it->second;
            }
            // phase/pi, folded exactly into [0,2) before going floating
            const Rational phase =
                (s - Rational(BigNat(2ull * (std::uint64_t)h * (std::uint64_t)n),
                              BigNat((std::uint64_t)k)))
                    .mod2();
            const double angle = std::numbers::pi * phase.to_double();
            sum_re += std::cos(angle);
            sum_im += std::sin(angle);
        }
        const double weight = std::sqrt((double)k) * rademacher_sinh_term_derivative((double)n, k);
        total_re += weight * sum_re;
        total_im += weight * sum_im;
    }
    const double scale = 1.0 / (std::numbers::pi * std::sqrt(2.0));
    const double value = scale * total_re;
    const double residue = scale * total_im;
    if (std::abs(residue) > 1e-6)
        throw consistency_error("rademacher_p: imaginary residue " + std::to_string(residue) +
                                " exceeds 1e-6");
    return value;
}

double hardy_ramanujan(int n) {
    if (n < 1) throw input_error("hardy_ramanujan: n must be at least 1");
    return std::exp(std::numbers::pi * std::sqrt(2.0 * n / 3.0)) / (4.0 * std::sqrt(3.0) * n);
}

BigNat poset_asymptotic(int n) {
    if (n < 1) throw input_error("poset_asymptotic: n must be at least 1");
    BigNat total;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n - i; ++j) {
            BigNat term = BigNat::binomial((unsigned)n, (unsigned)i);
            term *= BigNat::binomial((unsigned)(n - i), (unsigned)j);
            term *= (BigNat::pow2((unsigned)i) - BigNat(1)).pow((unsigned)j);
            term *= (BigNat::pow2((unsigned)j) - BigNat(1)).pow((unsigned)(n - i - j));
            total += term;
        }
    }
    return total;
}

Rational orbit_lower_bound(int n) {
    if (n < 1) throw input_error("orbit_lower_bound: n must be at least 1");
    return Rational(BigNat::pow2((std::uint64_t)n * (std::uint64_t)n),
                    BigNat::factorial((unsigned)n));
}

double s5_ratio(int n) {
    if (n < 1) throw input_error("s5_ratio: n must be at least 1");
    return std::exp2(p_exact(n).log2() - a_exact(n).log2());
}

}  // namespace modalkit
