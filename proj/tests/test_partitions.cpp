#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "modalkit/census.hpp"
#include "modalkit/errors.hpp"
#include "modalkit/partitions.hpp"

using namespace modalkit;

TEST_CASE("integer_partitions enumeration") {
    const auto p3 = integer_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts == std::vector<int>{3});
    CHECK(p3[1].parts == std::vector<int>{2, 1});
    CHECK(p3[2].parts == std::vector<int>{1, 1, 1});

    CHECK(integer_partitions(1).size() == 1);
    CHECK(integer_partitions(5).size() == 7);
    CHECK(integer_partitions(0).size() == 1);  // the empty partition

    const auto p6 = integer_partitions(6);
    for (std::size_t i = 0; i < p6.size(); ++i) {
        CHECK(p6[i].total() == 6);
        CHECK(std::is_sorted(p6[i].parts.rbegin(), p6[i].parts.rend()));
        if (i > 0) CHECK(p6[i].parts < p6[i - 1].parts);  // reverse-lexicographic
    }
}

TEST_CASE("multiplicities view") {
    const IntegerPartition p{{4, 2, 2, 1}};
    const std::vector<std::pair<int, int>> expect{{4, 1}, {2, 2}, {1, 1}};
    CHECK(p.multiplicities() == expect);
    int total = 0;
    for (auto [k, s] : p.multiplicities()) total += k * s;
    CHECK(total == p.total());
}

TEST_CASE("p_exact pentagonal recurrence vs enumeration oracle") {
    CHECK(p_exact(0) == BigNat(1));
    CHECK(p_exact(5) == BigNat(7));
    CHECK(p_exact(10) == BigNat(42));
    for (int n = 0; n <= 30; ++n)
        CHECK(p_exact(n) == BigNat(integer_partitions(n).size()));
    CHECK(p_exact(100) == BigNat(190569292));
    CHECK(p_exact(200).to_decimal() == "3972999029388");
}

TEST_CASE("bell numbers") {
    CHECK(bell(0) == BigNat(1));
    CHECK(bell(3) == BigNat(5));
    CHECK(bell(4) == BigNat(15));
    CHECK(bell(10) == BigNat(115975));
}

TEST_CASE("dedekind_sum values") {
    CHECK(dedekind_sum(1, 1) == Rational(0));
    CHECK(dedekind_sum(1, 2) == Rational(0));
    CHECK(dedekind_sum(1, 3) == Rational(BigNat(1), BigNat(18)));
    CHECK(dedekind_sum(2, 3) == Rational(BigNat(1), BigNat(18), true));
    CHECK(dedekind_sum(4, 3) == dedekind_sum(1, 3));  // periodic in h
    CHECK_THROWS_AS(dedekind_sum(0, 3), input_error);
    CHECK_THROWS_AS(dedekind_sum(1, 0), input_error);
}

TEST_CASE("dedekind reciprocity for coprime h < k <= 50") {
    for (std::int64_t k = 2; k <= 50; ++k)
        for (std::int64_t h = 1; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            const Rational lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
            const Rational rhs = Rational(-1) / Rational(4) +
                                 (Rational(BigNat((std::uint64_t)h), BigNat((std::uint64_t)k)) +
                                  Rational(BigNat((std::uint64_t)k), BigNat((std::uint64_t)h)) +
                                  Rational(BigNat(1), BigNat((std::uint64_t)(h * k)))) /
                                     Rational(12);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("rademacher_p rounds to the exact count") {
    CHECK(std::llround(rademacher_p(1, 5)) == 1);
    CHECK(std::llround(rademacher_p(10, 10)) == 42);
    CHECK(std::llround(rademacher_p(50, 25)) == 204226);
    for (int n : {1, 7, 25, 64, 100}) {
        const double v = rademacher_p(n, default_rademacher_terms(n));
        const double exact = p_exact(n).to_double();
        CHECK(std::abs(v - std::llround(v)) < 0.5);
        CHECK(std::llround(v) == (long long)exact);
    }
    CHECK_THROWS_AS(rademacher_p(0, 5), input_error);
    CHECK_THROWS_AS(rademacher_p(5, 0), input_error);
    CHECK_THROWS_AS(rademacher_p(201, 40), limit_error);
}

TEST_CASE("analytic derivative agrees with central differences") {
    const double step = 1e-6;
    for (int k : {1, 2, 3})
        for (double n : {5.0, 20.0, 80.0}) {
            const double analytic = rademacher_sinh_term_derivative(n, k);
            const double fd =
                (rademacher_sinh_term(n + step, k) - rademacher_sinh_term(n - step, k)) /
                (2 * step);
            CHECK(std::abs(analytic - fd) / std::abs(fd) < 1e-5);
        }
}

TEST_CASE("hardy_ramanujan closed form") {
    CHECK(hardy_ramanujan(1) == doctest::Approx(1.8766704226).epsilon(1e-9));
    CHECK(hardy_ramanujan(100) == doctest::Approx(1.9928089335e8).epsilon(1e-9));
    const double r100 = hardy_ramanujan(100) / p_exact(100).to_double();
    const double r20 = hardy_ramanujan(20) / p_exact(20).to_double();
    CHECK(r100 == doctest::Approx(1.045).epsilon(1e-3));
    CHECK(r100 >= 1.0);
    CHECK(r100 <= 1.1);
    CHECK(std::abs(r100 - 1.0) < std::abs(r20 - 1.0));
}

TEST_CASE("poset_asymptotic exact formula values") {
    CHECK(poset_asymptotic(1) == BigNat(0));  // empty inner sum
    CHECK(poset_asymptotic(2) == BigNat(2));
    CHECK(poset_asymptotic(3) == BigNat(18));
    CHECK(poset_asymptotic(4) == BigNat(170));
    // spot check scale at n = 20 via bit length only (formula is exact)
    CHECK(poset_asymptotic(20).bit_length() > 64);
}

TEST_CASE("s5_ratio decreases and is tiny by n = 8") {
    CHECK(s5_ratio(1) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(s5_ratio(2) == doctest::Approx(0.2).epsilon(1e-10));
    CHECK(s5_ratio(4) == doctest::Approx(5.0 / 3044.0).epsilon(1e-9));
    double prev = 1.0;
    for (int n = 1; n <= 8; ++n) {
        const double r = s5_ratio(n);
        CHECK(r < prev);
        prev = r;
    }
    CHECK(s5_ratio(8) < 1e-10);
}

TEST_CASE("orbit_lower_bound exact rationals") {
    CHECK(orbit_lower_bound(1) == Rational(2));
    CHECK(orbit_lower_bound(2) == Rational(8));
    CHECK(orbit_lower_bound(3) == Rational(BigNat(256), BigNat(3)));
    for (int n = 1; n <= 10; ++n) {
        const Rational bound = orbit_lower_bound(n);
        CHECK(bound <= Rational::from_big(a_exact(n)));
    }
}
