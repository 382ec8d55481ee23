#include <doctest.h>

#include <cstdint>

#include "modalkit/bignat.hpp"
#include "modalkit/rational.hpp"
#include "modalkit/splitmix64.hpp"

using modalkit::BigNat;
using modalkit::Rational;
using modalkit::SplitMix64;

TEST_CASE("bignat small arithmetic matches native") {
    SplitMix64 rng(0xB161234);
    for (int round = 0; round < 2000; ++round) {
        const std::uint64_t a = rng.next() >> (rng.next() % 40);
        const std::uint64_t b = rng.next() >> (rng.next() % 40 + 24);
        CHECK((BigNat(a) + BigNat(b)).to_decimal() == std::to_string(a + b));
        if (a >= b) CHECK((BigNat(a) - BigNat(b)).to_decimal() == std::to_string(a - b));
        const unsigned __int128 prod = (unsigned __int128)a * b;
        const BigNat big_prod = BigNat(a) * BigNat(b);
        CHECK(big_prod == BigNat((std::uint64_t)(prod >> 64)) * BigNat::pow2(64) +
                              BigNat((std::uint64_t)prod));
        if (b != 0) {
            auto [q, r] = BigNat::divmod(BigNat(a), BigNat(b));
            CHECK(q.as_u64() == a / b);
            CHECK(r.as_u64() == a % b);
        }
    }
}

TEST_CASE("bignat multi-limb divmod property") {
    SplitMix64 rng(71);
    auto random_big = [&](int limbs) {
        BigNat v;
        for (int i = 0; i < limbs; ++i) v = (v << 64) + BigNat(rng.next());
        return v;
    };
    for (int round = 0; round < 500; ++round) {
        BigNat a = random_big(1 + (int)(rng.next() % 6));
        BigNat b = random_big(1 + (int)(rng.next() % 3));
        if (b.is_zero()) b = BigNat(1);
        auto [q, r] = BigNat::divmod(a, b);
        CHECK(r < b);
        CHECK(q * b + r == a);
    }
}

TEST_CASE("bignat decimal round trip and known values") {
    CHECK(BigNat::pow2(100).to_decimal() == "1267650600228229401496703205376");
    CHECK(BigNat::from_decimal("1267650600228229401496703205376") == BigNat::pow2(100));
    CHECK(BigNat::factorial(20).to_decimal() == "2432902008176640000");
    CHECK(BigNat::factorial(0) == BigNat(1));
    CHECK(BigNat::binomial(52, 5).as_u64() == 2598960);
    CHECK(BigNat::binomial(200, 100).to_decimal() ==
          "90548514656103281165404177077484163874504589675413336841320");
    CHECK(BigNat(0).to_decimal() == "0");
    CHECK(BigNat::gcd(BigNat::factorial(10), BigNat::pow2(30)).as_u64() == 256);
}

TEST_CASE("bignat log2 uses the top mantissa bits") {
    CHECK(BigNat(1).log2() == doctest::Approx(0.0));
    CHECK(BigNat::pow2(500).log2() == doctest::Approx(500.0));
    const BigNat v = BigNat(3) * BigNat::pow2(200);  // log2 = 200 + log2(3)
    CHECK(v.log2() == doctest::Approx(201.58496250072115).epsilon(1e-12));
}

TEST_CASE("rational reduction and arithmetic") {
    const Rational half(BigNat(2), BigNat(4));
    CHECK(half.num() == BigNat(1));
    CHECK(half.den() == BigNat(2));
    CHECK((half + half) == Rational(1));
    CHECK((half - Rational(1)).sign() == -1);
    CHECK((half - Rational(1) + half).is_zero());
    CHECK((Rational(-3) * Rational(-2)) == Rational(6));
    CHECK((Rational(1) / Rational(-4)).to_string() == "-1/4");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational(BigNat(22), BigNat(7)).to_double() == doctest::Approx(22.0 / 7.0));
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1) < Rational(2));
    CHECK(Rational(-2) < Rational(-1));
    CHECK(Rational(-1) < Rational(BigNat(1), BigNat(100)));
    CHECK(Rational(BigNat(1), BigNat(3)) < Rational(BigNat(1), BigNat(2)));
    CHECK(Rational(BigNat(1), BigNat(2), true) < Rational(BigNat(1), BigNat(3), true));
}

TEST_CASE("rational mod2 folds into [0,2)") {
    CHECK(Rational(7).mod2() == Rational(1));
    CHECK(Rational(8).mod2() == Rational(0));
    CHECK(Rational(-7).mod2() == Rational(1));
    CHECK(Rational(BigNat(9), BigNat(4)).mod2() == Rational(BigNat(1), BigNat(4)));
    CHECK(Rational(BigNat(9), BigNat(4), true).mod2() == Rational(BigNat(7), BigNat(4)));
    CHECK(Rational(BigNat(1), BigNat(3), true).mod2() == Rational(BigNat(5), BigNat(3)));
}
