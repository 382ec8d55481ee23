#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modalkit {

// Arbitrary-precision natural number: little-endian vector of 64-bit limbs,
// canonical (no trailing zero limbs; zero is the empty vector).
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v);  // NOLINT: implicit on purpose, counts mix with literals

    static BigNat from_decimal(std::string_view s);
    static BigNat pow2(std::uint64_t exponent);
    static BigNat factorial(unsigned n);
    static BigNat binomial(unsigned n, unsigned k);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    std::size_t bit_length() const;  // 0 for zero
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const;    // requires fits_u64

    // log2 from the bit length plus the top 64 bits of mantissa; -inf for zero.
    double log2() const;
    double to_double() const;

    std::string to_decimal() const;

    BigNat& operator+=(const BigNat& rhs);
    BigNat& operator-=(const BigNat& rhs);  // requires *this >= rhs
    BigNat& operator*=(const BigNat& rhs);
    BigNat& operator<<=(std::uint64_t bits);
    BigNat& operator>>=(std::uint64_t bits);

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
    friend BigNat operator*(const BigNat& a, const BigNat& b);
    friend BigNat operator<<(BigNat a, std::uint64_t bits) { return a <<= bits; }
    friend BigNat operator>>(BigNat a, std::uint64_t bits) { return a >>= bits; }

    // Quotient and remainder; divisor must be nonzero.
    static std::pair<BigNat, BigNat> divmod(const BigNat& num, const BigNat& den);
    friend BigNat operator/(const BigNat& a, const BigNat& b) { return divmod(a, b).first; }
    friend BigNat operator%(const BigNat& a, const BigNat& b) { return divmod(a, b).second; }

    static BigNat gcd(BigNat a, BigNat b);
    BigNat pow(std::uint64_t exponent) const;

    std::strong_ordering operator<=>(const BigNat& rhs) const;
    bool operator==(const BigNat& rhs) const = default;

    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

private:
    std::vector<std::uint64_t> limbs_;

    void trim();
    // divides in place by a single nonzero word, returns the remainder
    std::uint64_t div_word(std::uint64_t w);
    static std::pair<BigNat, BigNat> divmod_long(const BigNat& num, const BigNat& den);
};

}  // namespace modalkit
