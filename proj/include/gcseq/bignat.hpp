#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcseq/errors.hpp"

namespace gcseq {

/// Arbitrary-precision nonnegative integer.
///
/// Storage is a boost cpp_int; this wrapper only adds the nonnegativity
/// contract (subtraction that would go below zero throws) and the handful of
/// bit-level queries the rest of the library needs.
class BigNat {
public:
    using Rep = boost::multiprecision::cpp_int;

    BigNat() = default;
    BigNat(std::uint64_t v) : v_(v) {} // NOLINT(google-explicit-constructor)

    static BigNat from_rep(Rep v) {
        if (v < 0) throw ArgumentError("BigNat: negative value");
        BigNat out;
        out.v_ = std::move(v);
        return out;
    }

    static BigNat from_decimal(std::string_view s) {
        if (s.empty()) throw ArgumentError("BigNat: empty decimal string");
        Rep v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw ArgumentError("BigNat: non-digit in decimal string");
            v = v * 10 + (c - '0');
        }
        return from_rep(std::move(v));
    }

    /// 2^e
    static BigNat pow2(std::size_t e) {
        BigNat out;
        boost::multiprecision::bit_set(out.v_, static_cast<unsigned>(e));
        return out;
    }

    /// 2^e - 1
    static BigNat mersenne(std::size_t e) { return pow2(e) - BigNat(1); }

    const Rep& rep() const noexcept { return v_; }

    bool is_zero() const noexcept { return v_.is_zero(); }
    bool is_odd() const noexcept { return boost::multiprecision::bit_test(v_, 0); }

    /// Number of significant bits; 0 for zero.
    std::size_t bit_length() const {
        if (v_.is_zero()) return 0;
        return static_cast<std::size_t>(boost::multiprecision::msb(v_)) + 1;
    }

    bool bit(std::size_t i) const { return boost::multiprecision::bit_test(v_, static_cast<unsigned>(i)); }

    /// Floor of log2; zero has no logarithm.
    std::size_t floor_log2() const {
        if (v_.is_zero()) throw ArgumentError("BigNat: log2 of zero");
        return bit_length() - 1;
    }

    std::uint64_t to_u64() const {
        if (bit_length() > 64) throw ArgumentError("BigNat: value does not fit in 64 bits");
        return v_.convert_to<std::uint64_t>();
    }

    std::string to_string() const { return v_.str(); }

    BigNat& operator+=(const BigNat& o) { v_ += o.v_; return *this; }
    BigNat& operator-=(const BigNat& o) {
        if (v_ < o.v_) throw ArgumentError("BigNat: subtraction underflow");
        v_ -= o.v_;
        return *this;
    }
    BigNat& operator*=(const BigNat& o) { v_ *= o.v_; return *this; }
    BigNat& operator/=(const BigNat& o) {
        if (o.is_zero()) throw ArgumentError("BigNat: division by zero");
        v_ /= o.v_;
        return *this;
    }
    BigNat& operator%=(const BigNat& o) {
        if (o.is_zero()) throw ArgumentError("BigNat: modulo by zero");
        v_ %= o.v_;
        return *this;
    }
    BigNat& operator<<=(std::size_t s) { v_ <<= s; return *this; }
    BigNat& operator>>=(std::size_t s) { v_ >>= s; return *this; }

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
    friend BigNat operator/(BigNat a, const BigNat& b) { return a /= b; }
    friend BigNat operator%(BigNat a, const BigNat& b) { return a %= b; }
    friend BigNat operator<<(BigNat a, std::size_t s) { return a <<= s; }
    friend BigNat operator>>(BigNat a, std::size_t s) { return a >>= s; }

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigNat& n) { return os << n.v_; }

private:
    Rep v_ = 0;
};

/// Greatest common divisor by Euclid's remainder sequence.
inline BigNat big_gcd(BigNat a, BigNat b) {
    if (a.is_zero() && b.is_zero()) throw ArgumentError("big_gcd: both arguments are zero");
    while (!b.is_zero()) {
        BigNat r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace gcseq
