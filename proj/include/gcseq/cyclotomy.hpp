#pragma once

/// Generalized cyclotomic classes of order two modulo p and 2p, and the
/// C_0 / C_1 split of Z_2p that defines the sequence.

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gcseq/errors.hpp"
#include "gcseq/ntcore.hpp"

namespace gcseq {

enum class ClassLabel : std::uint8_t { D0_2P, D1_2P, TWO_D0_P, TWO_D1_P, P_ITSELF, ZERO };

inline constexpr std::string_view to_string(ClassLabel c) {
    switch (c) {
    case ClassLabel::D0_2P: return "D0_2P";
    case ClassLabel::D1_2P: return "D1_2P";
    case ClassLabel::TWO_D0_P: return "TWO_D0_P";
    case ClassLabel::TWO_D1_P: return "TWO_D1_P";
    case ClassLabel::P_ITSELF: return "P_ITSELF";
    case ClassLabel::ZERO: return "ZERO";
    }
    return "?";
}

inline constexpr ClassLabel all_class_labels[] = {ClassLabel::D0_2P,    ClassLabel::D1_2P,    ClassLabel::TWO_D0_P,
                                                  ClassLabel::TWO_D1_P, ClassLabel::P_ITSELF, ClassLabel::ZERO};

using ResidueSet = std::vector<i64>; // sorted ascending

struct CyclotomicTables {
    PrimeParams params;
    ResidueSet d0p, d1p;         // mod p
    ResidueSet d02p, d12p;       // mod 2p
    ResidueSet two_d0p, two_d1p; // mod 2p
    ResidueSet c0, c1;           // mod 2p
    std::vector<ClassLabel> label; // indexed by residue mod 2p

    i64 p() const noexcept { return params.p; }
    i64 N() const noexcept { return params.N; }

    bool in_c1(i64 i) const {
        const ClassLabel c = classify_unchecked(i);
        return c == ClassLabel::D1_2P || c == ClassLabel::TWO_D1_P || c == ClassLabel::ZERO;
    }

    ClassLabel classify_unchecked(i64 i) const { return label[static_cast<std::size_t>(i)]; }

    /// Lookup over Z_p: 0 for D_0^(p), 1 for D_1^(p), -1 for zero.
    int index_mod_p(i64 a) const {
        const i64 r = static_cast<i64>(detail::reduce(a, static_cast<u64>(params.p)));
        if (r == 0) return -1;
        return std::binary_search(d0p.begin(), d0p.end(), r) ? 0 : 1;
    }
};

namespace detail {

inline ResidueSet sorted_unique(ResidueSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline ResidueSet merged(std::initializer_list<const ResidueSet*> parts) {
    ResidueSet out;
    for (const auto* s : parts) out.insert(out.end(), s->begin(), s->end());
    return sorted_unique(std::move(out));
}

} // namespace detail

inline CyclotomicTables build_tables(const PrimeParams& params) {
    // Re-validate: callers may have assembled PrimeParams by hand.
    const PrimeParams checked = PrimeParams::make(params.p, params.g);
    if (!(checked == params)) throw ArgumentError("build_tables: inconsistent PrimeParams");

    const i64 p = params.p, g = params.g, n2 = 2 * p, half = (p - 1) / 2;
    CyclotomicTables t;
    t.params = params;

    const u64 g2p = mod_pow(g, 2, p), g22p = mod_pow(g, 2, n2);
    u64 xp = 1, x2p = 1;
    for (i64 k = 0; k < half; ++k) {
        t.d0p.push_back(static_cast<i64>(xp));
        t.d1p.push_back(static_cast<i64>(detail::mul_mod(xp, static_cast<u64>(g), static_cast<u64>(p))));
        t.d02p.push_back(static_cast<i64>(x2p));
        t.d12p.push_back(static_cast<i64>(detail::mul_mod(x2p, static_cast<u64>(g), static_cast<u64>(n2))));
        xp = detail::mul_mod(xp, g2p, static_cast<u64>(p));
        x2p = detail::mul_mod(x2p, g22p, static_cast<u64>(n2));
    }
    for (i64 x : t.d0p) t.two_d0p.push_back(2 * x % n2);
    for (i64 x : t.d1p) t.two_d1p.push_back(2 * x % n2);

    for (auto* s : {&t.d0p, &t.d1p, &t.d02p, &t.d12p, &t.two_d0p, &t.two_d1p}) *s = detail::sorted_unique(std::move(*s));

    const ResidueSet self{p}, zero{0};
    t.c0 = detail::merged({&t.d02p, &t.two_d0p, &self});
    t.c1 = detail::merged({&t.d12p, &t.two_d1p, &zero});

    t.label.assign(static_cast<std::size_t>(n2), ClassLabel::ZERO);
    std::vector<int> hits(static_cast<std::size_t>(n2), 0);
    auto mark = [&](const ResidueSet& s, ClassLabel c) {
        for (i64 i : s) {
            t.label[static_cast<std::size_t>(i)] = c;
            ++hits[static_cast<std::size_t>(i)];
        }
    };
    mark(t.d02p, ClassLabel::D0_2P);
    mark(t.d12p, ClassLabel::D1_2P);
    mark(t.two_d0p, ClassLabel::TWO_D0_P);
    mark(t.two_d1p, ClassLabel::TWO_D1_P);
    mark(self, ClassLabel::P_ITSELF);
    mark(zero, ClassLabel::ZERO);
    for (int h : hits)
        if (h != 1) throw ConsistencyError("build_tables: classes do not partition Z_2p");
    return t;
}

inline ClassLabel classify(i64 i, const CyclotomicTables& t) {
    if (i < 0 || i >= t.N()) throw ArgumentError("classify: residue out of range [0, 2p)");
    return t.classify_unchecked(i);
}

struct ClassLemmaReport {
    bool two_in_d0p = false;         // observed location of 2
    bool two_location_ok = false;    // 2 in D_0^(p) iff p = +-1 (mod 8)
    bool two_inverse_ok = false;     // 2^{-1} mod p in D_0^(p) iff p = +-1 (mod 8)
    bool coset_products_ok = false;  // a D_j = D_{i+j} for every a in D_i
    bool reduction_ok = false;       // D_i^(2p) mod p = D_i^(p)
    bool partition_ok = false;       // six classes partition Z_2p, |classes| = (p-1)/2

    bool all_ok() const noexcept {
        return two_location_ok && two_inverse_ok && coset_products_ok && reduction_ok && partition_ok;
    }
};

/// Every a in Z_p^* is checked for the coset-product property, not a sample.
inline ClassLemmaReport check_class_lemmas(const CyclotomicTables& t) {
    ClassLemmaReport r;
    const i64 p = t.p();
    const bool expect_residue = t.params.two_is_residue();
    const i64 two = 2 % p;

    r.two_in_d0p = t.index_mod_p(two) == 0;
    r.two_location_ok = r.two_in_d0p == expect_residue;
    r.two_inverse_ok = (t.index_mod_p(static_cast<i64>(mod_inverse(2, p))) == 0) == expect_residue;

    const std::size_t half = static_cast<std::size_t>((p - 1) / 2);
    r.partition_ok = t.d0p.size() == half && t.d1p.size() == half && t.d02p.size() == half && t.d12p.size() == half &&
                     t.two_d0p.size() == half && t.two_d1p.size() == half &&
                     t.c0.size() + t.c1.size() == static_cast<std::size_t>(t.N());

    r.coset_products_ok = true;
    const ResidueSet* cls[2] = {&t.d0p, &t.d1p};
    for (int i = 0; i < 2 && r.coset_products_ok; ++i) {
        for (i64 a : *cls[i]) {
            for (int j = 0; j < 2; ++j) {
                ResidueSet prod;
                prod.reserve(cls[j]->size());
                for (i64 b : *cls[j]) prod.push_back(a * b % p);
                if (detail::sorted_unique(std::move(prod)) != *cls[(i + j) % 2]) {
                    r.coset_products_ok = false;
                    break;
                }
            }
            if (!r.coset_products_ok) break;
        }
    }

    auto reduce_set = [p](const ResidueSet& s) {
        ResidueSet out;
        for (i64 x : s) out.push_back(x % p);
        return detail::sorted_unique(std::move(out));
    };
    r.reduction_ok = reduce_set(t.d02p) == t.d0p && reduce_set(t.d12p) == t.d1p;
    return r;
}

} // namespace gcseq
