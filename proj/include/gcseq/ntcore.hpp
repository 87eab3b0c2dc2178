#pragma once

/// Exact integer primitives on machine words: modular arithmetic, Legendre
/// symbols, multiplicative orders, primitive roots, and the Z_2p CRT map.

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcseq/errors.hpp"

namespace gcseq {

using u64 = std::uint64_t;
using i64 = std::int64_t;

namespace detail {

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 reduce(i64 a, u64 m) {
    i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

inline u64 pow_mod_u(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace detail

/// base^exp mod modulus, for any signed base.
inline u64 mod_pow(i64 base, u64 exp, i64 modulus) {
    if (modulus < 2) throw ArgumentError("mod_pow: modulus must be >= 2");
    const auto m = static_cast<u64>(modulus);
    return detail::pow_mod_u(detail::reduce(base, m), exp, m);
}

/// Deterministic Miller-Rabin; the first twelve prime bases cover all of u64.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : bases) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : bases) {
        u64 x = detail::pow_mod_u(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline bool is_odd_prime(i64 p) { return p > 2 && is_prime(static_cast<u64>(p)); }

/// Prime factorisation by trial division, ascending primes with multiplicity.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q) continue;
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline u64 euler_phi(u64 n) {
    u64 phi = n;
    for (auto [q, e] : factorize(n)) phi = phi / q * (q - 1);
    return phi;
}

/// Inverse of a modulo m; throws when gcd(a, m) != 1.
inline u64 mod_inverse(i64 a, i64 m) {
    if (m < 2) throw ArgumentError("mod_inverse: modulus must be >= 2");
    i64 old_r = static_cast<i64>(detail::reduce(a, static_cast<u64>(m))), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) throw ArgumentError("mod_inverse: argument not invertible");
    return detail::reduce(old_s, static_cast<u64>(m));
}

/// Legendre symbol (a/p) by Euler's criterion.
inline int legendre(i64 a, i64 p) {
    if (!is_odd_prime(p)) throw ArgumentError("legendre: modulus must be an odd prime");
    const u64 t = mod_pow(a, static_cast<u64>(p - 1) / 2, p);
    if (t == 0) return 0;
    return t == 1 ? 1 : -1;
}

/// Smallest t >= 1 with a^t = 1 (mod n).
inline u64 mult_order(i64 a, i64 n) {
    if (n < 2) throw ArgumentError("mult_order: modulus must be >= 2");
    const auto m = static_cast<u64>(n);
    const u64 ar = detail::reduce(a, m);
    if (std::gcd(ar, m) != 1) throw ArgumentError("mult_order: argument not coprime to modulus");
    u64 order = euler_phi(m);
    for (auto [q, e] : factorize(order)) {
        for (unsigned i = 0; i < e && order % q == 0; ++i) {
            if (detail::pow_mod_u(ar, order / q, m) != 1) break;
            order /= q;
        }
    }
    return order;
}

/// Smallest odd g >= 3 generating both Z_p^* and Z_2p^*.
inline i64 find_common_primitive_root(i64 p) {
    if (!is_odd_prime(p)) throw ArgumentError("find_common_primitive_root: p must be an odd prime");
    for (i64 g = 3;; g += 2) {
        if (g % p == 0) continue;
        if (mult_order(g, p) == static_cast<u64>(p - 1) && mult_order(g, 2 * p) == static_cast<u64>(p - 1)) return g;
    }
}

/// The x in [0, 2p) with x = A (mod p) and x = B (mod 2).
inline i64 crt_2p(i64 A, i64 B, i64 p) {
    if (!is_odd_prime(p)) throw ArgumentError("crt_2p: p must be an odd prime");
    if (A < 0 || A >= p) throw ArgumentError("crt_2p: A out of range");
    if (B != 0 && B != 1) throw ArgumentError("crt_2p: B must be 0 or 1");
    return (A * (p + 1) + p * B) % (2 * p);
}

/// Parameters (p, g) of one sequence in the family; construction validates.
struct PrimeParams {
    i64 p = 0;
    i64 g = 0;
    i64 N = 0;
    int p_mod_8 = 0;

    static PrimeParams make(i64 p, std::optional<i64> g = std::nullopt) {
        if (!is_odd_prime(p)) throw ArgumentError("p = " + std::to_string(p) + " is not an odd prime");
        const i64 gg = g ? *g : find_common_primitive_root(p);
        if (gg % 2 == 0 || gg < 3 || gg > 2 * p - 1)
            throw ArgumentError("g = " + std::to_string(gg) + " must be odd and in [3, 2p-1]");
        if (gg % p == 0) throw ArgumentError("g = " + std::to_string(gg) + " is divisible by p");
        const auto want = static_cast<u64>(p - 1);
        const u64 ord_p = mult_order(gg, p);
        if (ord_p != want || mult_order(gg, 2 * p) != want)
            throw ArgumentError("g = " + std::to_string(gg) + " is not a common primitive root of " + std::to_string(p) +
                                " and " + std::to_string(2 * p) + " (order mod p is " + std::to_string(ord_p) + ")");
        return PrimeParams{p, gg, 2 * p, static_cast<int>(p % 8)};
    }

    /// p = +-1 (mod 8), i.e. 2 is a quadratic residue.
    bool two_is_residue() const noexcept { return p_mod_8 == 1 || p_mod_8 == 7; }

    friend bool operator==(const PrimeParams&, const PrimeParams&) = default;
};

/// Primes in [lo, hi], ascending.
inline std::vector<i64> odd_primes_in(i64 lo, i64 hi) {
    std::vector<i64> out;
    for (i64 n = std::max<i64>(lo, 3); n <= hi; ++n)
        if (is_odd_prime(n)) out.push_back(n);
    return out;
}

} // namespace gcseq
