#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modalkit/bignat.hpp"
#include "modalkit/rational.hpp"

namespace modalkit {

// Non-increasing positive parts summing to n. The multiplicity view s_k
// (count of parts equal to k) drives the cycle-index sum.
struct IntegerPartition {
    std::vector<int> parts;

    int total() const;
    // (part value, multiplicity), descending part value
    std::vector<std::pair<int, int>> multiplicities() const;
    bool operator==(const IntegerPartition&) const = default;
};

// All partitions of n in reverse-lexicographic order ([3], [2,1], [1,1,1]).
std::vector<IntegerPartition> integer_partitions(int n);

// Euler's pentagonal-number recurrence; memoized, exact.
BigNat p_exact(int n);

// Bell triangle recurrence.
BigNat bell(int n);

// s(h,k) = sum_{j=1}^{k-1} (j/k)(hj/k - floor(hj/k) - 1/2), exact.
// Requires k >= 1 and 1 <= h <= k; the sum is empty for k = 1.
Rational dedekind_sum(std::int64_t h, std::int64_t k);

// Truncated Rademacher series for p(n): for each k <= terms the inner sum
// runs over h = 1..k with gcd(h,k) = 1, phase pi*s(h,k) - 2*pi*h*n/k taken
// from the exact Dedekind sum; the n-derivative of sinh((pi/k)sqrt(2/3 x))
// / sqrt(x), x = n - 1/24, is analytic. Fails with a consistency error if
// the imaginary residue survives above 1e-6.
double rademacher_p(int n, int terms);
int default_rademacher_terms(int n);  // ceil(3 sqrt n) + 5

// exp(pi sqrt(2n/3)) / (4 sqrt(3) n)
double hardy_ramanujan(int n);

// Exact value of the double sum
//   sum_{i=1}^{n} sum_{j=1}^{n-i} C(n,i) C(n-i,j) (2^i-1)^j (2^j-1)^(n-i-j).
// The inner sum is empty at n = 1, so the value there is 0.
BigNat poset_asymptotic(int n);

// p(n)/a(n) in log space (bit lengths + top-64-bit mantissas).
double s5_ratio(int n);

// exact rational 2^(n^2) / n!
Rational orbit_lower_bound(int n);

// the bracketed sinh term of the series and its n-derivative, exposed so
// the derivative can be checked against finite differences
double rademacher_sinh_term(double n, int k);
double rademacher_sinh_term_derivative(double n, int k);

}  // namespace modalkit
