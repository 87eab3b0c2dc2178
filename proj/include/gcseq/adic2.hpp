#pragma once

/// Exact 2-adic complexity, floor(log2((2^N - 1) / gcd(S(2), 2^N - 1))),
/// with the gcd split against 2^p - 1 and 2^p + 1, and the quadratic-character
/// sum G_p evaluated in Z / (2^N - 1).

#include <cstdint>
#include <optional>
#include <utility>

#include "gcseq/bignat.hpp"
#include "gcseq/errors.hpp"
#include "gcseq/ntcore.hpp"
#include "gcseq/seqgen.hpp"

namespace gcseq {

/// Residue modulo 2^N - 1.
class GroupRingResidue {
public:
    using Rep = BigNat::Rep;

    GroupRingResidue(std::size_t N, Rep v) : modulus_(BigNat::mersenne(N).rep()), n_(N) {
        v %= modulus_;
        if (v < 0) v += modulus_;
        value_ = std::move(v);
    }

    std::size_t N() const noexcept { return n_; }
    BigNat value() const { return BigNat::from_rep(value_); }
    BigNat modulus() const { return BigNat::from_rep(modulus_); }

    friend GroupRingResidue operator+(const GroupRingResidue& a, const GroupRingResidue& b) {
        a.require_same(b);
        return {a.n_, a.value_ + b.value_};
    }
    friend GroupRingResidue operator-(const GroupRingResidue& a, const GroupRingResidue& b) {
        a.require_same(b);
        return {a.n_, a.value_ - b.value_};
    }
    friend GroupRingResidue operator*(const GroupRingResidue& a, const GroupRingResidue& b) {
        a.require_same(b);
        return {a.n_, a.value_ * b.value_};
    }
    GroupRingResidue operator-() const { return {n_, -value_}; }

    friend bool operator==(const GroupRingResidue& a, const GroupRingResidue& b) {
        return a.n_ == b.n_ && a.value_ == b.value_;
    }

private:
    void require_same(const GroupRingResidue& o) const {
        if (n_ != o.n_) throw ArgumentError("GroupRingResidue: mismatched moduli");
    }
    Rep modulus_;
    Rep value_;
    std::size_t n_;
};

/// G_p = sum_{a=1}^{p-1} (a/p) 2^(2a) mod 2^(2p) - 1.
inline GroupRingResidue compute_Gp(i64 p) {
    if (!is_odd_prime(p)) throw ArgumentError("compute_Gp: p must be an odd prime");
    BigNat::Rep acc = 0;
    for (i64 a = 1; a < p; ++a) {
        BigNat::Rep term = 0;
        boost::multiprecision::bit_set(term, static_cast<unsigned>(2 * a));
        if (legendre(a, p) == 1)
            acc += term;
        else
            acc -= term;
    }
    return {static_cast<std::size_t>(2 * p), std::move(acc)};
}

struct Lemma9Check {
    BigNat s2_mod;    // S(2) mod 2^N - 1
    BigNat s2_rhs;    // closed form for S(2)
    BigNat gp;        // G_p
    BigNat gp_sq;     // G_p^2
    BigNat gp_sq_rhs; // (-1/p)(p - (2^N - 1)/3)
    bool s2_ok = false;
    bool gp_sq_ok = false;

    bool all_ok() const noexcept { return s2_ok && gp_sq_ok; }
};

/// Halving uses the inverse 2^(N-1) of 2; (2^N - 1)/3 is an exact integer.
inline Lemma9Check check_lemma9(i64 p, const BinarySequence& s) {
    if (!is_odd_prime(p)) throw ArgumentError("check_lemma9: p must be an odd prime");
    const auto N = static_cast<std::size_t>(2 * p);
    if (s.size() != N) throw ArgumentError("check_lemma9: sequence length must be 2p");
    using Rep = BigNat::Rep;
    auto R = [N](Rep v) { return GroupRingResidue(N, std::move(v)); };

    const Rep two_p = BigNat::pow2(static_cast<std::size_t>(p)).rep();
    const Rep third = BigNat::mersenne(N).rep() / 3;
    const GroupRingResidue half = R(BigNat::pow2(N - 1).rep());
    const GroupRingResidue one = R(1);
    const GroupRingResidue T = R(two_p + 1);
    const GroupRingResidue G = compute_Gp(p);

    const GroupRingResidue rhs_a = (one - T * half) + T * half * R(third) - half * R(legendre(2, p) * two_p + 1) * G;
    const GroupRingResidue lhs_a = R(eval_S_at_2(s).rep());
    const GroupRingResidue gsq = G * G;
    const GroupRingResidue rhs_b = R(legendre(-1, p) * (Rep(p) - third));

    Lemma9Check out;
    out.s2_mod = lhs_a.value();
    out.s2_rhs = rhs_a.value();
    out.gp = G.value();
    out.gp_sq = gsq.value();
    out.gp_sq_rhs = rhs_b.value();
    out.s2_ok = lhs_a == rhs_a;
    out.gp_sq_ok = gsq == rhs_b;
    return out;
}

/// (gcd(s2, 2^h - 1), gcd(s2, 2^h + 1)) with h = p.
inline std::pair<BigNat, BigNat> gcd_split(const BigNat& s2, std::size_t h) {
    if (h == 0) throw ArgumentError("gcd_split: exponent must be positive");
    const BigNat two_h = BigNat::pow2(h);
    return {big_gcd(s2, two_h - BigNat(1)), big_gcd(s2, two_h + BigNat(1))};
}

struct AdicReport {
    i64 p = 0, g = 0; // zero for raw bit strings
    std::size_t N = 0;
    BigNat s2;
    BigNat gcd_total, gcd_minus, gcd_plus;
    std::size_t phi2_floor = 0;
    std::size_t predicted_phi2_floor = 0;
    bool matches_theorem2 = false;
};

/// Works on any even-length period; p is N/2.
inline AdicReport adic_complexity(const BinarySequence& s) {
    const std::size_t N = s.size();
    if (N == 0 || N % 2) throw ArgumentError("adic_complexity: period length must be even and nonzero");
    AdicReport rep;
    if (s.params) {
        rep.p = s.params->p;
        rep.g = s.params->g;
    }
    rep.N = N;
    rep.s2 = eval_S_at_2(s);
    const BigNat M = BigNat::mersenne(N);
    rep.gcd_total = big_gcd(rep.s2, M);
    std::tie(rep.gcd_minus, rep.gcd_plus) = gcd_split(rep.s2, N / 2);
    if (!(rep.gcd_minus * rep.gcd_plus == rep.gcd_total) || !rep.gcd_minus.is_odd() || !rep.gcd_plus.is_odd())
        throw ConsistencyError("adic_complexity: gcd split does not factor gcd(S(2), 2^N - 1)");
    rep.phi2_floor = (M / rep.gcd_total).floor_log2();
    rep.predicted_phi2_floor = N - 1;
    rep.matches_theorem2 = rep.phi2_floor == rep.predicted_phi2_floor;
    return rep;
}

} // namespace gcseq
