#pragma once

/// Dense univariate polynomials over a prime field F_r.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gcseq/bignat.hpp"
#include "gcseq/errors.hpp"
#include "gcseq/ntcore.hpp"

namespace gcseq {

/// Coefficients mod r, lowest degree first, no trailing zeros.
/// The zero polynomial has no coefficients and degree -1.
class FieldPolynomial {
public:
    FieldPolynomial() = default;
    explicit FieldPolynomial(std::vector<u64> coeffs) : c_(std::move(coeffs)) { trim(); }

    static FieldPolynomial monomial(std::size_t degree, u64 coeff = 1) {
        std::vector<u64> c(degree + 1, 0);
        c[degree] = coeff;
        return FieldPolynomial(std::move(c));
    }

    /// x^n - 1 over F_r.
    static FieldPolynomial x_pow_minus_one(std::size_t n, u64 r) {
        std::vector<u64> c(n + 1, 0);
        c[0] = r - 1;
        c[n] = 1;
        return FieldPolynomial(std::move(c));
    }

    const std::vector<u64>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    u64 lead() const { return c_.empty() ? 0 : c_.back(); }
    u64 operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    friend bool operator==(const FieldPolynomial&, const FieldPolynomial&) = default;

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            if (c_[i] != 1 || i == 0) out += std::to_string(c_[i]);
            if (i >= 1) out += (c_[i] != 1 ? "*x" : "x");
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<u64> c_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldPolynomial& f) { return os << f.to_string(); }

namespace poly {

inline FieldPolynomial add(const FieldPolynomial& a, const FieldPolynomial& b, u64 r) {
    std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % r;
    return FieldPolynomial(std::move(c));
}

inline FieldPolynomial sub(const FieldPolynomial& a, const FieldPolynomial& b, u64 r) {
    std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + r - b[i]) % r;
    return FieldPolynomial(std::move(c));
}

inline FieldPolynomial mul(const FieldPolynomial& a, const FieldPolynomial& b, u64 r) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<u64> c(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = (c[i + j] + detail::mul_mod(x[i], y[j], r)) % r;
    }
    return FieldPolynomial(std::move(c));
}

inline FieldPolynomial scale(const FieldPolynomial& a, u64 s, u64 r) {
    std::vector<u64> c(a.coeffs());
    for (auto& v : c) v = detail::mul_mod(v, s % r, r);
    return FieldPolynomial(std::move(c));
}

/// (quotient, remainder) of a / b.
inline std::pair<FieldPolynomial, FieldPolynomial> divmod(const FieldPolynomial& a, const FieldPolynomial& b, u64 r) {
    if (b.is_zero()) throw ArgumentError("polynomial division by zero");
    if (a.degree() < b.degree()) return {FieldPolynomial{}, a};
    std::vector<u64> rem(a.coeffs());
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const u64 inv_lead = mod_inverse(static_cast<i64>(d.back()), static_cast<i64>(r));
    std::vector<u64> q(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        const u64 coef = detail::mul_mod(rem[i], inv_lead, r);
        q[i - db] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) {
            const u64 t = detail::mul_mod(coef, d[j], r);
            rem[i - db + j] = (rem[i - db + j] + r - t) % r;
        }
    }
    rem.resize(db);
    return {FieldPolynomial(std::move(q)), FieldPolynomial(std::move(rem))};
}

inline FieldPolynomial mod(const FieldPolynomial& a, const FieldPolynomial& b, u64 r) { return divmod(a, b, r).second; }

inline FieldPolynomial make_monic(const FieldPolynomial& a, u64 r) {
    if (a.is_zero()) return a;
    return scale(a, mod_inverse(static_cast<i64>(a.lead()), static_cast<i64>(r)), r);
}

/// Monic gcd by the Euclidean remainder sequence; gcd(0, 0) = 0.
inline FieldPolynomial gcd(FieldPolynomial a, FieldPolynomial b, u64 r) {
    while (!b.is_zero()) {
        FieldPolynomial t = mod(a, b, r);
        a = std::move(b);
        b = std::move(t);
    }
    return make_monic(a, r);
}

/// base^e mod modulus.
inline FieldPolynomial powmod(const FieldPolynomial& base, const BigNat& e, const FieldPolynomial& modulus, u64 r) {
    FieldPolynomial result = mod(FieldPolynomial({1}), modulus, r);
    FieldPolynomial b = mod(base, modulus, r);
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = mod(mul(result, result, r), modulus, r);
        if (e.bit(i)) result = mod(mul(result, b, r), modulus, r);
    }
    return result;
}

/// Rabin's test: f of degree m is irreducible iff x^(r^m) = x mod f and
/// gcd(x^(r^(m/q)) - x, f) = 1 for every prime q dividing m.
inline bool is_irreducible(const FieldPolynomial& f, u64 r) {
    const int m = f.degree();
    if (m < 1) return false;
    if (m == 1) return true;
    const FieldPolynomial x = FieldPolynomial::monomial(1);
    // frob[k] = x^(r^k) mod f
    std::vector<FieldPolynomial> frob{mod(x, f, r)};
    for (int k = 1; k <= m; ++k) frob.push_back(powmod(frob.back(), BigNat(r), f, r));
    if (!(frob[static_cast<std::size_t>(m)] == mod(x, f, r))) return false;
    for (auto [q, e] : factorize(static_cast<u64>(m))) {
        (void)e;
        const FieldPolynomial h = sub(frob[static_cast<std::size_t>(m / static_cast<int>(q))], x, r);
        if (gcd(f, h, r).degree() != 0) return false;
    }
    return true;
}

/// Polynomial with integer coefficients in {0, 1} read from a bit vector.
inline FieldPolynomial from_bits(const std::vector<std::uint8_t>& bits) {
    std::vector<u64> c(bits.begin(), bits.end());
    return FieldPolynomial(std::move(c));
}

} // namespace poly
} // namespace gcseq
