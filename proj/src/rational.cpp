#include "modalkit/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace modalkit {

Rational::Rational(std::int64_t v)
    : num_(v < 0 ? (std::uint64_t)(-(v + 1)) + 1 : (std::uint64_t)v),
      den_(1),
      negative_(v < 0) {}

Rational::Rational(BigNat num, BigNat den, bool negative)
    : num_(std::move(num)), den_(std::move(den)), negative_(negative) {
    if (den_.is_zero()) throw std::logic_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (num_.is_zero()) {
        den_ = 1;
        negative_ = false;
        return;
    }
    BigNat g = BigNat::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    Rational out = *this;
    if (!out.num_.is_zero()) out.negative_ = !out.negative_;
    return out;
}

// signed add on reduced operands
Rational operator+(const Rational& a, const Rational& b) {
    BigNat lhs = a.num_ * b.den_;
    BigNat rhs = b.num_ * a.den_;
    BigNat den = a.den_ * b.den_;
    if (a.negative_ == b.negative_)
        return Rational(lhs + rhs, std::move(den), a.negative_);
    if (lhs >= rhs)
        return Rational(lhs - rhs, std::move(den), a.negative_);
    return Rational(rhs - lhs, std::move(den), b.negative_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_, a.negative_ != b.negative_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero()) throw std::logic_error("Rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_, a.negative_ != b.negative_);
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    const int sa = sign(), sb = rhs.sign();
    if (sa != sb) return sa <=> sb;
    auto mag = (num_ * rhs.den_) <=> (rhs.num_ * den_);
    if (sa >= 0) return mag;
    if (mag == std::strong_ordering::less) return std::strong_ordering::greater;
    if (mag == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

Rational Rational::mod2() const {
    BigNat two_den = den_ * BigNat(2);
    auto [q, r] = BigNat::divmod(num_, two_den);
    if (!negative_ || r.is_zero()) return Rational(r, den_);
    // negative and not on a multiple of 2: fold up into [0,2)
    return Rational(two_den - r, den_);
}

double Rational::to_double() const {
    double v = std::exp2(num_.log2() - den_.log2());
    return negative_ ? -v : v;
}

std::string Rational::to_string() const {
    std::string out = negative_ ? "-" : "";
    out += num_.to_decimal();
    if (!den_.is_one()) out += "/" + den_.to_decimal();
    return out;
}

}  // namespace modalkit
