#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "gcseq/lincomp.hpp"

namespace gcseq {

TEST(BerlekampMassey, Examples) {
    EXPECT_EQ(berlekamp_massey(generate(PrimeParams::make(5, 3)), 7).L, 6u);
    EXPECT_EQ(berlekamp_massey(generate(PrimeParams::make(17, 3)), 5).L, 34u);
    EXPECT_EQ(berlekamp_massey(BinarySequence::from_string("000000"), 5).L, 0u);
    EXPECT_EQ(berlekamp_massey(BinarySequence::from_string("1"), 5).L, 1u);
}

TEST(BerlekampMassey, ConnectionGeneratesTheSegment) {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        const u64 r = iter % 2 ? 7 : 5;
        std::string bits(rng() % 30 + 1, '0');
        for (auto& c : bits) c = rng() % 2 ? '1' : '0';
        const auto s = BinarySequence::from_string(bits);
        const auto bm = berlekamp_massey(s, r);
        const auto& c = bm.connection.coeffs();
        EXPECT_LE(bm.connection.degree(), static_cast<int>(bm.L));
        // the recurrence reproduces every term of the doubled segment past L
        const std::size_t n = 2 * s.size();
        for (std::size_t t = bm.L; t < n; ++t) {
            u64 acc = s.bits[t % s.size()];
            for (std::size_t i = 1; i < c.size(); ++i) acc = (acc + c[i] * s.bits[(t - i) % s.size()]) % r;
            EXPECT_EQ(acc, 0u);
        }
    }
}

// Subfield sufficiency: synthesis over F_{7^4} of the lifted bits finds the
// same L as over F_7.
TEST(BerlekampMassey, ExtensionFieldAgrees) {
    const auto s = generate(PrimeParams::make(5, 3));
    const auto F = ExtField::make(7, 4);
    std::vector<ExtElement> terms;
    for (int rep = 0; rep < 2; ++rep)
        for (auto b : s.bits) terms.push_back(F.lift(b));
    EXPECT_EQ(berlekamp_massey(F, std::span<const ExtElement>(terms)).L, 6u);
}

TEST(LcViaGcd, Examples) {
    const auto g5 = lc_via_gcd(generate(PrimeParams::make(5, 3)), 7);
    EXPECT_EQ(g5.L, 6u);
    EXPECT_EQ(g5.gcd_poly, even_root_product(5));
    const auto g23 = lc_via_gcd(generate(PrimeParams::make(23, 7)), 13);
    EXPECT_EQ(g23.L, 46u);
    EXPECT_EQ(g23.minimal_poly, FieldPolynomial::x_pow_minus_one(46, 13));
    const auto g113 = lc_via_gcd(generate(PrimeParams::make(113)), 13);
    EXPECT_EQ(g113.L, 226u);
    EXPECT_EQ(lc_via_gcd(BinarySequence::from_string("0000"), 5).L, 0u);
    EXPECT_THROW(lc_via_gcd(generate(PrimeParams::make(5)), 3), ArgumentError);
}

TEST(LcViaRoots, Examples) {
    const auto s5 = generate(PrimeParams::make(5, 3));
    const auto roots = lc_via_roots(s5, 7);
    ASSERT_TRUE(roots.has_value());
    EXPECT_EQ(roots->m, 4u);
    EXPECT_EQ(roots->L, 6u);
    EXPECT_EQ(roots->zero_exponents, (std::vector<i64>{2, 4, 6, 8}));
    const auto s19 = generate(PrimeParams::make(19, 3));
    EXPECT_FALSE(lc_via_roots(s19, 13).has_value()); // ord_19(13) = 18 > 12
    const auto wide = lc_via_roots(s19, 13, 18);
    ASSERT_TRUE(wide.has_value());
    EXPECT_EQ(wide->L, 20u);
    EXPECT_THROW(lc_via_roots(BinarySequence::from_string("10"), 5), ArgumentError);
}

TEST(LcPrediction, Prediction) {
    EXPECT_EQ(theorem1_prediction(17), 34);
    EXPECT_EQ(theorem1_prediction(13), 14);
    EXPECT_EQ(theorem1_prediction(7), 14);
    EXPECT_EQ(theorem1_prediction(3), 4);
    EXPECT_THROW(theorem1_prediction(15), ArgumentError);
}

TEST(AnalyzeLinear, Examples) {
    const auto r2 = analyze_linear(generate(PrimeParams::make(13, 7)), 5);
    EXPECT_EQ(r2.lc_bm, 14u);
    EXPECT_EQ(r2.lc_gcd, 14u);
    EXPECT_EQ(r2.lc_roots, std::optional<std::size_t>(14));
    EXPECT_TRUE(r2.methods_agree);
    EXPECT_TRUE(r2.matches_theorem);
    EXPECT_EQ(minimal_poly_shape(r2), MinimalPolyShape::EvenRootsRemoved);

    const auto r4 = analyze_linear(generate(PrimeParams::make(19, 3)), 13, 18);
    EXPECT_EQ(r4.lc(), 20u);
    EXPECT_EQ(r4.lc_roots, std::optional<std::size_t>(20));
    EXPECT_TRUE(r4.matches_theorem);

    const auto r3 = analyze_linear(generate(PrimeParams::make(17, 3)), 5);
    EXPECT_EQ(r3.lc(), 34u);
    EXPECT_FALSE(r3.lc_roots.has_value());
    EXPECT_EQ(minimal_poly_shape(r3), MinimalPolyShape::FullPeriod);

    EXPECT_THROW(analyze_linear(generate(PrimeParams::make(5)), 5), ArgumentError);
    EXPECT_THROW(analyze_linear(generate(PrimeParams::make(7)), 3), ArgumentError);
}

// r = 5 divides (19 + 1)/4, so eta_1 = 0 and the odd classes become roots of
// S; the methods still agree and the report records the miss.
TEST(AnalyzeLinear, PredictionMissAtNineteenOverF5) {
    const auto rep = analyze_linear(generate(PrimeParams::make(19)), 5);
    EXPECT_TRUE(rep.methods_agree);
    EXPECT_EQ(rep.lc(), 11u);
    EXPECT_EQ(rep.predicted, 20);
    EXPECT_FALSE(rep.matches_theorem);
    EXPECT_EQ(minimal_poly_shape(rep), MinimalPolyShape::Other);
}

TEST(AnalyzeLinear, CrossMethodGrid) {
    for (i64 p : odd_primes_in(3, 50)) {
        const auto s = generate(PrimeParams::make(p));
        for (u64 r : {5, 7, 11, 13}) {
            if (r == static_cast<u64>(p)) continue;
            const auto rep = analyze_linear(s, r);
            EXPECT_TRUE(rep.methods_agree) << p << "," << r;
            const auto xn1 = FieldPolynomial::x_pow_minus_one(s.size(), r);
            EXPECT_TRUE(poly::mod(xn1, rep.minimal_poly, r).is_zero());
            EXPECT_TRUE(minimal_poly_annihilates(s, rep.minimal_poly, r));
            EXPECT_EQ(rep.minimal_poly.degree(), static_cast<int>(rep.lc()));
            // normalized to constant term 1 it is exactly the synthesized connection polynomial
            const u64 c0 = rep.minimal_poly[0];
            ASSERT_NE(c0, 0u);
            const auto normalized = poly::scale(rep.minimal_poly, mod_inverse(static_cast<i64>(c0), static_cast<i64>(r)), r);
            EXPECT_EQ(normalized, berlekamp_massey(s, r).connection) << p << "," << r;
        }
    }
}

TEST(MinimalPoly, AnnihilationDetectsWrongPolynomial) {
    const auto s = generate(PrimeParams::make(5, 3));
    EXPECT_FALSE(minimal_poly_annihilates(s, FieldPolynomial({6, 1}), 7));
    EXPECT_TRUE(minimal_poly_annihilates(s, FieldPolynomial::x_pow_minus_one(10, 7), 7));
}

// At (19, 5) the gcd is not self-reciprocal, so the polynomial annihilates in
// the connection sense but its reversal does not.
TEST(MinimalPoly, ConnectionConventionMatters) {
    const auto s = generate(PrimeParams::make(19));
    const auto rep = analyze_linear(s, 5);
    EXPECT_TRUE(minimal_poly_annihilates(s, rep.minimal_poly, 5));
    auto rev = rep.minimal_poly.coeffs();
    std::reverse(rev.begin(), rev.end());
    EXPECT_FALSE(minimal_poly_annihilates(s, FieldPolynomial(rev), 5));
}

} // namespace gcseq
