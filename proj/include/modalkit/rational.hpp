#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "modalkit/bignat.hpp"

namespace modalkit {

// Exact signed rational. Always reduced; zero is non-negative with
// denominator 1.
class Rational {
public:
    Rational() : num_(), den_(1), negative_(false) {}
    Rational(std::int64_t v);  // NOLINT: implicit, mirrors BigNat
    Rational(BigNat num, BigNat den, bool negative = false);

    static Rational from_big(BigNat n, bool negative = false) {
        return Rational(std::move(n), BigNat(1), negative);
    }

    int sign() const { return num_.is_zero() ? 0 : (negative_ ? -1 : 1); }
    const BigNat& num() const { return num_; }
    const BigNat& den() const { return den_; }
    bool is_integer() const { return den_.is_one(); }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    std::strong_ordering operator<=>(const Rational& rhs) const;
    bool operator==(const Rational& rhs) const = default;

    // value - 2*floor(value/2), exact, in [0, 2). Used for phase folding.
    Rational mod2() const;

    double to_double() const;
    // "p/q" with a leading '-' when negative; plain "p" for integers
    std::string to_string() const;

private:
    BigNat num_, den_;
    bool negative_;

    void reduce();
};

}  // namespace modalkit
