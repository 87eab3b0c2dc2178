#pragma once

/// Linear complexity and minimal polynomial over F_r by three independent
/// routes: Berlekamp-Massey synthesis, gcd(x^N - 1, S(x)), and counting the
/// roots of S among the 2p-th roots of unity in F_{r^m}.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gcseq/errors.hpp"
#include "gcseq/ffield.hpp"
#include "gcseq/ntcore.hpp"
#include "gcseq/polynomial.hpp"
#include "gcseq/seqgen.hpp"

namespace gcseq {

inline constexpr u64 default_m_cap = 12;

/// Shortest LFSR for a finite segment. connection = 1 + c_1 x + ... + c_L x^L
/// with s_n + c_1 s_{n-1} + ... + c_L s_{n-L} = 0.
template <FiniteField F>
struct BmResult {
    std::size_t L = 0;
    std::vector<typename F::Element> connection;
};

template <FiniteField F>
BmResult<F> berlekamp_massey(const F& field, std::span<const typename F::Element> s) {
    using E = typename F::Element;
    std::vector<E> C{field.one()}, B{field.one()};
    std::size_t L = 0, shift = 1;
    E b = field.one();
    for (std::size_t n = 0; n < s.size(); ++n) {
        E d = s[n];
        for (std::size_t i = 1; i <= L && i < C.size(); ++i) d = field.add(d, field.mul(C[i], s[n - i]));
        if (field.is_zero(d)) {
            ++shift;
            continue;
        }
        const E coef = field.mul(d, field.inv(b));
        std::vector<E> T = C;
        if (C.size() < B.size() + shift) C.resize(B.size() + shift, field.zero());
        for (std::size_t i = 0; i < B.size(); ++i) C[i + shift] = field.sub(C[i + shift], field.mul(coef, B[i]));
        if (2 * L <= n) {
            L = n + 1 - L;
            B = std::move(T);
            b = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    C.resize(std::max<std::size_t>(L + 1, 1), field.zero());
    return {L, std::move(C)};
}

struct BmSummary {
    std::size_t L = 0;
    FieldPolynomial connection;
};

/// Synthesis over F_r fed two full periods, which pins down the periodic
/// linear complexity since it never exceeds N.
inline BmSummary berlekamp_massey(const BinarySequence& s, u64 r) {
    const PrimeField field(r);
    std::vector<u64> terms;
    terms.reserve(2 * s.size());
    for (int rep = 0; rep < 2; ++rep) terms.insert(terms.end(), s.bits.begin(), s.bits.end());
    auto res = berlekamp_massey(field, std::span<const u64>(terms));
    return {res.L, FieldPolynomial(std::move(res.connection))};
}

struct GcdRoute {
    std::size_t L = 0;
    FieldPolynomial minimal_poly; // (x^N - 1) / d
    FieldPolynomial gcd_poly;     // d = gcd(x^N - 1, S(x)), monic
};

inline GcdRoute lc_via_gcd(const BinarySequence& s, u64 r) {
    require_field_prime(r);
    const std::size_t n = s.size();
    const FieldPolynomial xn1 = FieldPolynomial::x_pow_minus_one(n, r);
    const FieldPolynomial S = poly::from_bits(s.bits);
    // gcd(x^N - 1, 0) = x^N - 1 covers the all-zero sequence.
    FieldPolynomial d = poly::gcd(xn1, S, r);
    auto [m, rem] = poly::divmod(xn1, d, r);
    if (!rem.is_zero()) throw ConsistencyError("lc_via_gcd: gcd does not divide x^N - 1");
    const std::size_t L = n - static_cast<std::size_t>(d.degree());
    return {L, std::move(m), std::move(d)};
}

struct RootRoute {
    std::size_t L = 0;
    u64 m = 0;
    std::vector<i64> zero_exponents; // k with S(beta^k) = 0
};

/// Empty (SKIPPED) when ord_p(r) exceeds the cap.
inline std::optional<RootRoute> lc_via_roots(const BinarySequence& s, u64 r, u64 m_cap = default_m_cap) {
    if (!s.params) throw ArgumentError("lc_via_roots: sequence has no (p, g) parameters");
    const i64 p = s.params->p;
    auto setup = setup_field(p, r, m_cap);
    if (!setup) return std::nullopt;
    const ExtField& F = setup->field;
    RootRoute out;
    out.m = setup->m;
    ExtElement beta_k = F.one();
    for (i64 k = 0; k < 2 * p; ++k, beta_k = F.mul(beta_k, setup->beta))
        if (F.is_zero(eval_S_at_field_point(F, s, beta_k))) out.zero_exponents.push_back(k);
    out.L = static_cast<std::size_t>(2 * p) - out.zero_exponents.size();
    return out;
}

/// 2p when p = +-1 (mod 8), p + 1 when p = +-3 (mod 8).
inline i64 theorem1_prediction(i64 p) {
    if (!is_odd_prime(p)) throw ArgumentError("theorem1_prediction: p must be an odd prime");
    const i64 t = p % 8;
    return (t == 1 || t == 7) ? 2 * p : p + 1;
}

/// Recurrence sum_j m_j s_{t-j} = 0 holds for every t over one period.
/// (x^N - 1)/gcd(x^N - 1, S(x)) is a connection polynomial in this sense;
/// its reciprocal is the characteristic polynomial. The two coincide only
/// when the gcd is self-reciprocal.
inline bool minimal_poly_annihilates(const BinarySequence& s, const FieldPolynomial& mpoly, u64 r) {
    const std::size_t n = s.size();
    const auto& c = mpoly.coeffs();
    for (std::size_t t = 0; t < n; ++t) {
        u64 acc = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (s.bits[(t + n - j % n) % n]) acc = (acc + c[j]) % r;
        if (acc) return false;
    }
    return true;
}

struct LinComplexityReport {
    i64 p = 0, g = 0;
    u64 r = 0, m = 0;
    std::size_t lc_bm = 0;
    std::size_t lc_gcd = 0;
    std::optional<std::size_t> lc_roots; // empty = skipped (m over cap)
    FieldPolynomial minimal_poly;
    FieldPolynomial gcd_poly;
    i64 predicted = 0;
    bool methods_agree = false;
    bool matches_theorem = false;

    std::size_t lc() const noexcept { return lc_gcd; }
};

/// Runs every route; disagreement is reported through methods_agree, never thrown.
inline LinComplexityReport analyze_linear(const BinarySequence& s, u64 r, u64 m_cap = default_m_cap) {
    if (!s.params) throw ArgumentError("analyze_linear: sequence has no (p, g) parameters");
    const PrimeParams& pp = *s.params;
    require_field_prime(r);
    if (r == static_cast<u64>(pp.p)) throw ArgumentError("analyze_linear: r must differ from p");

    LinComplexityReport rep;
    rep.p = pp.p;
    rep.g = pp.g;
    rep.r = r;
    rep.m = mult_order(static_cast<i64>(r), pp.p);
    rep.lc_bm = berlekamp_massey(s, r).L;
    auto gcd_route = lc_via_gcd(s, r);
    rep.lc_gcd = gcd_route.L;
    rep.minimal_poly = std::move(gcd_route.minimal_poly);
    rep.gcd_poly = std::move(gcd_route.gcd_poly);
    if (auto roots = lc_via_roots(s, r, m_cap)) rep.lc_roots = roots->L;
    rep.predicted = theorem1_prediction(pp.p);
    rep.methods_agree = rep.lc_bm == rep.lc_gcd && (!rep.lc_roots || *rep.lc_roots == rep.lc_gcd);
    rep.matches_theorem = static_cast<i64>(rep.lc_gcd) == rep.predicted;
    return rep;
}

/// 1 + x + ... + x^(p-1): the product of (x - beta^k) over nonzero even k.
inline FieldPolynomial even_root_product(i64 p) {
    return FieldPolynomial(std::vector<u64>(static_cast<std::size_t>(p), 1));
}

enum class MinimalPolyShape { FullPeriod, EvenRootsRemoved, Other };

inline MinimalPolyShape minimal_poly_shape(const LinComplexityReport& rep) {
    if (rep.gcd_poly.degree() == 0) return MinimalPolyShape::FullPeriod;
    if (rep.gcd_poly == even_root_product(rep.p)) return MinimalPolyShape::EvenRootsRemoved;
    return MinimalPolyShape::Other;
}

inline const char* to_string(MinimalPolyShape s) {
    switch (s) {
    case MinimalPolyShape::FullPeriod: return "x^N - 1";
    case MinimalPolyShape::EvenRootsRemoved: return "(x^N - 1) / prod_{k in 2D0 u 2D1} (x - beta^k)";
    case MinimalPolyShape::Other: return "other";
    }
    return "?";
}

} // namespace gcseq
