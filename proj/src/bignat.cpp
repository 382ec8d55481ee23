#include "modalkit/bignat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "modalkit/errors.hpp"

namespace modalkit {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigNat::BigNat(u64 v) {
    if (v != 0) limbs_.push_back(v);
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

u64 BigNat::as_u64() const {
    if (limbs_.empty()) return 0;
    if (limbs_.size() > 1) throw std::logic_error("BigNat::as_u64: value exceeds 64 bits");
    return limbs_[0];
}

std::strong_ordering BigNat::operator<=>(const BigNat& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 s = (u128)limbs_[i] + carry;
        if (i < rhs.limbs_.size()) s += rhs.limbs_[i];
        limbs_[i] = (u64)s;
        carry = (u64)(s >> 64);
        if (carry == 0 && i >= rhs.limbs_.size()) break;
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
    if (*this < rhs) throw std::logic_error("BigNat underflow");
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 sub = (u128)borrow + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        if (sub == 0 && i >= rhs.limbs_.size()) break;
        u128 cur = limbs_[i];
        if (cur >= sub) {
            limbs_[i] = (u64)(cur - sub);
            borrow = 0;
        } else {
            limbs_[i] = (u64)(((u128)1 << 64) + cur - sub);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BigNat out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = (u128)a.limbs_[i] * b.limbs_[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = (u64)cur;
            carry = (u64)(cur >> 64);
        }
        out.limbs_[i + b.limbs_.size()] += carry;
    }
    out.trim();
    return out;
}

BigNat& BigNat::operator*=(const BigNat& rhs) {
    *this = *this * rhs;
    return *this;
}

BigNat& BigNat::operator<<=(u64 bits) {
    if (is_zero() || bits == 0) return *this;
    const std::size_t words = bits / 64, rem = bits % 64;
    limbs_.insert(limbs_.begin(), words, 0);
    if (rem != 0) {
        u64 carry = 0;
        for (std::size_t i = words; i < limbs_.size(); ++i) {
            u64 nxt = limbs_[i] >> (64 - rem);
            limbs_[i] = (limbs_[i] << rem) | carry;
            carry = nxt;
        }
        if (carry) limbs_.push_back(carry);
    }
    return *this;
}

BigNat& BigNat::operator>>=(u64 bits) {
    const std::size_t words = bits / 64, rem = bits % 64;
    if (words >= limbs_.size()) {
        limbs_.clear();
        return *this;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + (std::ptrdiff_t)words);
    if (rem != 0) {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            limbs_[i] >>= rem;
            if (i + 1 < limbs_.size()) limbs_[i] |= limbs_[i + 1] << (64 - rem);
        }
    }
    trim();
    return *this;
}

std::uint64_t BigNat::div_word(u64 w) {
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = (u64)(cur / w);
        rem = cur % w;
    }
    trim();
    return (u64)rem;
}

// Knuth algorithm D on 64-bit limbs.
std::pair<BigNat, BigNat> BigNat::divmod_long(const BigNat& num, const BigNat& den) {
    const int shift = std::countl_zero(den.limbs_.back());
    BigNat v = den;
    v <<= (u64)shift;
    BigNat u = num;
    u <<= (u64)shift;
    const std::size_t n = v.limbs_.size();
    const std::size_t m = u.limbs_.size() - n;
    u.limbs_.push_back(0);  // u has m+n+1 limbs

    BigNat q;
    q.limbs_.assign(m + 1, 0);
    const u64 vtop = v.limbs_[n - 1];
    const u64 vsec = v.limbs_[n - 2];  // n >= 2 here

    for (std::size_t j = m + 1; j-- > 0;) {
        u128 top = ((u128)u.limbs_[j + n] << 64) | u.limbs_[j + n - 1];
        u128 qhat = top / vtop;
        u128 rhat = top % vtop;
        while (qhat >= ((u128)1 << 64) ||
               qhat * vsec > ((rhat << 64) | u.limbs_[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= ((u128)1 << 64)) break;
        }
        // multiply-subtract qhat * v from u[j .. j+n]
        u128 borrow = 0, carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u128 prod = qhat * v.limbs_[i] + carry;
            carry = prod >> 64;
            u128 sub = (u64)prod + borrow;
            if ((u128)u.limbs_[i + j] >= sub) {
                u.limbs_[i + j] = (u64)((u128)u.limbs_[i + j] - sub);
                borrow = 0;
            } else {
                u.limbs_[i + j] = (u64)(((u128)1 << 64) + u.limbs_[i + j] - sub);
                borrow = 1;
            }
        }
        u128 sub = carry + borrow;
        bool negative = (u128)u.limbs_[j + n] < sub;
        u.limbs_[j + n] = (u64)((u128)u.limbs_[j + n] - sub);
        if (negative) {
            // qhat was one too large: add v back
            --qhat;
            u128 c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u128 s = (u128)u.limbs_[i + j] + v.limbs_[i] + c;
                u.limbs_[i + j] = (u64)s;
                c = s >> 64;
            }
            u.limbs_[j + n] += (u64)c;
        }
        q.limbs_[j] = (u64)qhat;
    }
    q.trim();
    u.limbs_.resize(n);
    u.trim();
    u >>= (u64)shift;
    return {std::move(q), std::move(u)};
}

std::pair<BigNat, BigNat> BigNat::divmod(const BigNat& num, const BigNat& den) {
    if (den.is_zero()) throw std::logic_error("BigNat division by zero");
    if (num < den) return {BigNat{}, num};
    if (den.limbs_.size() == 1) {
        BigNat q = num;
        u64 r = q.div_word(den.limbs_[0]);
        return {std::move(q), BigNat(r)};
    }
    return divmod_long(num, den);
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
    while (!b.is_zero()) {
        BigNat r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigNat BigNat::pow(u64 exponent) const {
    BigNat base = *this, out = 1;
    while (exponent > 0) {
        if (exponent & 1) out *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return out;
}

BigNat BigNat::pow2(u64 exponent) {
    BigNat out = 1;
    out <<= exponent;
    return out;
}

BigNat BigNat::factorial(unsigned n) {
    BigNat out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= BigNat(i);
    return out;
}

BigNat BigNat::binomial(unsigned n, unsigned k) {
    if (k > n) return {};
    if (k > n - k) k = n - k;
    BigNat out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out *= BigNat(n - k + i);
        u64 r = out.div_word(i);
        if (r != 0) throw std::logic_error("binomial: non-exact intermediate");
    }
    return out;
}

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty()) throw input_error("empty decimal literal");
    BigNat out;
    for (char c : s) {
        if (c < '0' || c > '9') throw input_error(std::string("invalid decimal digit '") + c + "'");
        out *= BigNat(10);
        out += BigNat((u64)(c - '0'));
    }
    return out;
}

std::string BigNat::to_decimal() const {
    if (is_zero()) return "0";
    // peel 19 digits at a time
    static constexpr u64 chunk = 10'000'000'000'000'000'000ull;
    BigNat tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        u64 r = tmp.div_word(chunk);
        if (tmp.is_zero()) {
            out.insert(0, std::to_string(r));
        } else {
            std::string part = std::to_string(r);
            out.insert(0, std::string(19 - part.size(), '0') + part);
        }
    }
    return out;
}

double BigNat::log2() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = bit_length();
    if (bits <= 64) return std::log2((double)limbs_[0]);
    BigNat top = *this;
    top >>= (u64)(bits - 64);
    return std::log2((double)top.limbs_[0]) + (double)(bits - 64);
}

double BigNat::to_double() const {
    if (is_zero()) return 0.0;
    const std::size_t bits = bit_length();
    if (bits <= 64) return (double)limbs_[0];
    BigNat top = *this;
    top >>= (u64)(bits - 64);
    return std::ldexp((double)top.limbs_[0], (int)(bits - 64));
}

}  // namespace modalkit
