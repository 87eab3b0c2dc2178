#pragma once

/// Prime fields F_r and extensions F_{r^m} in a polynomial basis, roots of
/// unity of order 2p, the order-two Gauss periods, and the closed-form values
/// of the generating polynomial at powers of a 2p-th root of unity.

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcseq/bignat.hpp"
#include "gcseq/cyclotomy.hpp"
#include "gcseq/errors.hpp"
#include "gcseq/ntcore.hpp"
#include "gcseq/polynomial.hpp"
#include "gcseq/seqgen.hpp"

namespace gcseq {

template <class F>
concept FiniteField = requires(const F& f, const typename F::Element& a, i64 n) {
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.from_int(n) } -> std::same_as<typename F::Element>;
    { f.add(a, a) } -> std::same_as<typename F::Element>;
    { f.sub(a, a) } -> std::same_as<typename F::Element>;
    { f.neg(a) } -> std::same_as<typename F::Element>;
    { f.mul(a, a) } -> std::same_as<typename F::Element>;
    { f.inv(a) } -> std::same_as<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.characteristic() } -> std::convertible_to<u64>;
};

inline void require_field_prime(u64 r) {
    if (r < 5 || !is_prime(r)) throw ArgumentError("field characteristic must be a prime >= 5, got " + std::to_string(r));
}

/// F_r with residues as elements.
class PrimeField {
public:
    using Element = u64;

    explicit PrimeField(u64 r) : r_(r) { require_field_prime(r); }

    u64 characteristic() const noexcept { return r_; }
    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }
    Element from_int(i64 n) const { return detail::reduce(n, r_); }
    Element add(Element a, Element b) const noexcept { return (a + b) % r_; }
    Element sub(Element a, Element b) const noexcept { return (a + r_ - b) % r_; }
    Element neg(Element a) const noexcept { return (r_ - a) % r_; }
    Element mul(Element a, Element b) const noexcept { return detail::mul_mod(a, b, r_); }
    Element inv(Element a) const {
        if (a == 0) throw ArgumentError("PrimeField: inverse of zero");
        return mod_inverse(static_cast<i64>(a), static_cast<i64>(r_));
    }
    bool is_zero(Element a) const noexcept { return a == 0; }

private:
    u64 r_;
};

/// Element of F_{r^m}: exactly m coefficients, x^0 first.
struct ExtElement {
    std::vector<u64> coeffs;
    friend bool operator==(const ExtElement&, const ExtElement&) = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(coeffs[i]);
        return s + "]";
    }
};

/// Lexicographically smallest monic irreducible of degree m: candidates are
/// x^m + sum c_i x^i with the integer sum c_i r^i running upward from zero.
inline FieldPolynomial find_irreducible(u64 r, int m) {
    require_field_prime(r);
    if (m < 1) throw ArgumentError("find_irreducible: degree must be >= 1");
    std::vector<u64> c(static_cast<std::size_t>(m) + 1, 0);
    c.back() = 1;
    for (;;) {
        FieldPolynomial f(c);
        if (poly::is_irreducible(f, r)) return f;
        // next candidate: increment the base-r counter formed by c_0 .. c_{m-1}
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(m) && ++c[i] == r) c[i++] = 0;
        if (i == static_cast<std::size_t>(m)) throw ConsistencyError("find_irreducible: exhausted candidates");
    }
}

/// F_{r^m} = F_r[x] / (f), f monic irreducible of degree m.
class ExtField {
public:
    using Element = ExtElement;

    ExtField(u64 r, FieldPolynomial modulus) : r_(r), f_(std::move(modulus)) {
        require_field_prime(r);
        if (f_.degree() < 1 || f_.lead() != 1) throw ArgumentError("ExtField: modulus must be monic of degree >= 1");
        if (!poly::is_irreducible(f_, r_)) throw ArgumentError("ExtField: modulus is reducible");
        m_ = static_cast<std::size_t>(f_.degree());
    }

    static ExtField make(u64 r, int m) { return ExtField(r, find_irreducible(r, m)); }

    u64 characteristic() const noexcept { return r_; }
    std::size_t degree() const noexcept { return m_; }
    const FieldPolynomial& modulus() const noexcept { return f_; }

    /// r^m
    BigNat order() const {
        BigNat q(1);
        for (std::size_t i = 0; i < m_; ++i) q *= BigNat(r_);
        return q;
    }

    Element zero() const { return Element{std::vector<u64>(m_, 0)}; }
    Element one() const { return from_int(1); }
    Element from_int(i64 n) const {
        Element e = zero();
        e.coeffs[0] = detail::reduce(n, r_);
        return e;
    }

    /// The element whose coefficients are the base-r digits of n, c_0 lowest.
    Element from_index(BigNat n) const {
        Element e = zero();
        const BigNat rr(r_);
        for (std::size_t i = 0; i < m_ && !n.is_zero(); ++i) {
            e.coeffs[i] = (n % rr).to_u64();
            n /= rr;
        }
        return e;
    }

    Element add(const Element& a, const Element& b) const {
        Element c = zero();
        for (std::size_t i = 0; i < m_; ++i) c.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % r_;
        return c;
    }
    Element sub(const Element& a, const Element& b) const {
        Element c = zero();
        for (std::size_t i = 0; i < m_; ++i) c.coeffs[i] = (a.coeffs[i] + r_ - b.coeffs[i]) % r_;
        return c;
    }
    Element neg(const Element& a) const { return sub(zero(), a); }

    Element mul(const Element& a, const Element& b) const {
        std::vector<u64> t(2 * m_ - 1, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            if (a.coeffs[i] == 0) continue;
            for (std::size_t j = 0; j < m_; ++j)
                t[i + j] = (t[i + j] + detail::mul_mod(a.coeffs[i], b.coeffs[j], r_)) % r_;
        }
        const auto& f = f_.coeffs();
        for (std::size_t i = t.size(); i-- > m_;) {
            const u64 c = t[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j < m_; ++j)
                t[i - m_ + j] = (t[i - m_ + j] + r_ - detail::mul_mod(c, f[j], r_)) % r_;
        }
        t.resize(m_);
        return Element{std::move(t)};
    }

    /// a^(r^m - 2)
    Element inv(const Element& a) const;

    bool is_zero(const Element& a) const {
        for (u64 c : a.coeffs)
            if (c) return false;
        return true;
    }

    /// True when every coefficient of degree >= 1 vanishes.
    bool in_prime_subfield(const Element& a) const {
        for (std::size_t i = 1; i < m_; ++i)
            if (a.coeffs[i]) return false;
        return true;
    }

    Element lift(u64 v) const { return from_int(static_cast<i64>(v % r_)); }

private:
    u64 r_;
    FieldPolynomial f_;
    std::size_t m_ = 0;
};

template <FiniteField F>
typename F::Element field_pow(const F& field, typename F::Element base, const BigNat& e) {
    auto result = field.one();
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        result = field.mul(result, result);
        if (e.bit(i)) result = field.mul(result, base);
    }
    return result;
}

template <FiniteField F>
typename F::Element field_pow(const F& field, typename F::Element base, u64 e) {
    auto result = field.one();
    while (e) {
        if (e & 1) result = field.mul(result, base);
        base = field.mul(base, base);
        e >>= 1;
    }
    return result;
}

inline ExtElement ExtField::inv(const ExtElement& a) const {
    if (is_zero(a)) throw ArgumentError("ExtField: inverse of zero");
    return field_pow(*this, a, order() - BigNat(2));
}

/// True iff y has multiplicative order exactly n.
template <FiniteField F>
bool has_exact_order(const F& field, const typename F::Element& y, u64 n) {
    if (field.is_zero(y)) return false;
    if (!(field_pow(field, y, n) == field.one())) return false;
    for (auto [q, e] : factorize(n)) {
        (void)e;
        if (field_pow(field, y, n / q) == field.one()) return false;
    }
    return true;
}

/// First element of exact order `order` among the images x^((q-1)/order),
/// x running over nonzero elements in index order.
inline ExtElement root_of_unity(const ExtField& field, u64 order) {
    const BigNat q_minus_1 = field.order() - BigNat(1);
    if (!(q_minus_1 % BigNat(order)).is_zero())
        throw PreconditionError("root_of_unity: " + std::to_string(order) + " does not divide r^m - 1");
    const BigNat e = q_minus_1 / BigNat(order);
    for (BigNat n(1); n <= q_minus_1; n += BigNat(1)) {
        ExtElement y = field_pow(field, field.from_index(n), e);
        if (has_exact_order(field, y, order)) return y;
    }
    throw ConsistencyError("root_of_unity: no element of the requested order");
}

struct GaussPeriodPair {
    ExtElement eta0, eta1;
};

/// eta_i = sum over D_i^(p) of beta^(2j).
inline GaussPeriodPair gauss_periods(const ExtField& field, const ExtElement& beta, const CyclotomicTables& t) {
    const i64 p = t.p();
    if (!has_exact_order(field, beta, static_cast<u64>(2 * p)))
        throw ArgumentError("gauss_periods: beta must have multiplicative order 2p");
    const ExtElement alpha = field.mul(beta, beta);
    std::vector<ExtElement> alpha_pow{field.one()};
    for (i64 i = 1; i < p; ++i) alpha_pow.push_back(field.mul(alpha_pow.back(), alpha));
    GaussPeriodPair out{field.zero(), field.zero()};
    for (i64 i : t.d0p) out.eta0 = field.add(out.eta0, alpha_pow[static_cast<std::size_t>(i)]);
    for (i64 i : t.d1p) out.eta1 = field.add(out.eta1, alpha_pow[static_cast<std::size_t>(i)]);
    return out;
}

/// Both periods lie in the prime subfield F_r.
inline bool rationality_check(const ExtField& field, const GaussPeriodPair& pair) {
    return field.in_prime_subfield(pair.eta0) && field.in_prime_subfield(pair.eta1);
}

struct GaussIdentityCheck {
    bool sum_is_minus_one = false;
    bool quadratic_ok = false; // branch selected by p mod 4
};

inline GaussIdentityCheck check_gauss_identities(const ExtField& field, const GaussPeriodPair& pair, i64 p) {
    GaussIdentityCheck c;
    c.sum_is_minus_one = field.add(pair.eta0, pair.eta1) == field.from_int(-1);
    if (p % 4 == 1) {
        c.quadratic_ok = field.mul(pair.eta0, field.add(field.one(), pair.eta0)) == field.from_int((p - 1) / 4);
    } else {
        c.quadratic_ok = field.mul(pair.eta1, field.add(field.one(), pair.eta1)) == field.from_int(-((p + 1) / 4));
    }
    return c;
}

/// Horner evaluation of S(x) = sum s_i x^i with bits lifted into the field.
template <FiniteField F>
typename F::Element eval_S_at_field_point(const F& field, const BinarySequence& s, const typename F::Element& x) {
    auto acc = field.zero();
    for (std::size_t i = s.size(); i-- > 0;) {
        acc = field.mul(acc, x);
        if (s.bits[i]) acc = field.add(acc, field.one());
    }
    return acc;
}

/// Closed-form S(beta^k) for the class of k.
inline ExtElement lemma8_closed_form(const ExtField& field, ClassLabel cls, const PrimeParams& params,
                                     const GaussPeriodPair& pair) {
    const ExtElement one = field.one();
    const ExtElement two = field.from_int(2);
    if (cls == ClassLabel::ZERO) return field.from_int(params.p);
    if (cls == ClassLabel::P_ITSELF) return one;
    if (params.two_is_residue()) {
        switch (cls) {
        case ClassLabel::TWO_D0_P: return field.add(one, field.mul(two, pair.eta1));
        case ClassLabel::TWO_D1_P: return field.add(one, field.mul(two, pair.eta0));
        default: return one;
        }
    }
    switch (cls) {
    case ClassLabel::D0_2P: return field.neg(field.mul(two, pair.eta0));
    case ClassLabel::D1_2P: return field.neg(field.mul(two, pair.eta1));
    default: return field.zero();
    }
}

struct Lemma8Row {
    i64 k = 0;
    ClassLabel cls = ClassLabel::ZERO;
    ExtElement direct;
    ExtElement closed_form;
    bool agree = false;
};

struct Lemma8Table {
    std::vector<Lemma8Row> rows;
    /// k outside 2D_0 u 2D_1 where S(beta^k) vanishes.
    std::vector<i64> unexpected_zeros;
    bool all_agree = true;
};

/// Direct vs closed-form S(beta^k). With every_k the table covers all of
/// [0, 2p); otherwise one representative (the smallest member) per class.
inline Lemma8Table lemma8_case_table(const ExtField& field, const BinarySequence& s, const ExtElement& beta,
                                     const CyclotomicTables& t, const GaussPeriodPair& pair, bool every_k = false) {
    Lemma8Table out;
    std::vector<char> seen(std::size(all_class_labels), false);
    ExtElement beta_k = field.one();
    for (i64 k = 0; k < t.N(); ++k, beta_k = field.mul(beta_k, beta)) {
        const ClassLabel cls = t.classify_unchecked(k);
        auto& flag = seen[static_cast<std::size_t>(cls)];
        const ExtElement direct = eval_S_at_field_point(field, s, beta_k);
        const bool even_nonzero = cls == ClassLabel::TWO_D0_P || cls == ClassLabel::TWO_D1_P;
        if (!even_nonzero && field.is_zero(direct)) out.unexpected_zeros.push_back(k);
        if (!every_k && flag) continue;
        flag = true;
        Lemma8Row row{k, cls, direct, lemma8_closed_form(field, cls, t.params, pair), false};
        row.agree = row.direct == row.closed_form;
        out.all_agree = out.all_agree && row.agree;
        out.rows.push_back(std::move(row));
    }
    return out;
}

/// F_{r^m} with m = ord_p(r), together with its deterministic beta.
struct FieldSetup {
    u64 r = 0;
    u64 m = 0;
    ExtField field;
    ExtElement beta;
};

/// Empty when ord_p(r) exceeds m_cap.
inline std::optional<FieldSetup> setup_field(i64 p, u64 r, u64 m_cap) {
    require_field_prime(r);
    if (!is_odd_prime(p)) throw ArgumentError("setup_field: p must be an odd prime");
    if (r == static_cast<u64>(p)) throw ArgumentError("setup_field: r must differ from p");
    const u64 m = mult_order(static_cast<i64>(r), p);
    if (m > m_cap) return std::nullopt;
    ExtField field = ExtField::make(r, static_cast<int>(m));
    ExtElement beta = root_of_unity(field, static_cast<u64>(2 * p));
    return FieldSetup{r, m, std::move(field), std::move(beta)};
}

} // namespace gcseq
