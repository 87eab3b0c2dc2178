#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "gcseq/seqgen.hpp"

namespace gcseq {

TEST(Generate, Examples) {
    EXPECT_EQ(generate(PrimeParams::make(5, 3)).to_string(), "1001101100");
    EXPECT_EQ(generate(PrimeParams::make(7, 3)).to_string(), "10010110001011");
    EXPECT_EQ(generate(PrimeParams::make(13, 7)).to_string(), "10001101001110111001011000");
    EXPECT_EQ(generate(PrimeParams::make(3)).to_string(), "100011");
}

TEST(Generate, WeightIsP) {
    for (i64 p : odd_primes_in(3, 500)) {
        const auto s = generate(PrimeParams::make(p));
        EXPECT_EQ(s.size(), static_cast<std::size_t>(2 * p));
        EXPECT_EQ(s.weight(), static_cast<std::size_t>(p));
    }
}

TEST(BitString, RoundTripAndValidation) {
    const auto s = BinarySequence::from_string("1001101100\n");
    EXPECT_EQ(s.to_string(), "1001101100");
    EXPECT_FALSE(s.params.has_value());
    EXPECT_THROW(BinarySequence::from_string(""), ArgumentError);
    EXPECT_THROW(BinarySequence::from_string("10a1"), ArgumentError);
}

TEST(EvalSAt2, Examples) {
    EXPECT_EQ(eval_S_at_2(generate(PrimeParams::make(5, 3))), BigNat(217));
    EXPECT_EQ(eval_S_at_2(generate(PrimeParams::make(7, 3))), BigNat(13417));
    EXPECT_EQ(eval_S_at_2(BinarySequence::from_string("0000")), BigNat(0));
    EXPECT_EQ(eval_S_at_2(BinarySequence::from_string("01")), BigNat(2));
}

TEST(Autocorrelation, Examples) {
    const auto s5 = generate(PrimeParams::make(5, 3));
    EXPECT_EQ(autocorrelation(s5, 0), 10);
    EXPECT_EQ(autocorrelation(s5, 1), -2);
    EXPECT_EQ(autocorrelation(BinarySequence::from_string("100011"), 3), -6);
    EXPECT_THROW(autocorrelation(s5, 10), ArgumentError);
    EXPECT_THROW(autocorrelation(s5, -1), ArgumentError);
}

TEST(Spectrum, Examples) {
    EXPECT_EQ(autocorr_spectrum(generate(PrimeParams::make(17))), (AutocorrSpectrum{{34, 1}, {30, 1}, {-2, 32}}));
    EXPECT_EQ(autocorr_spectrum(generate(PrimeParams::make(19))),
              (AutocorrSpectrum{{38, 1}, {-38, 1}, {2, 18}, {-2, 18}}));
    EXPECT_EQ(autocorr_spectrum(generate(PrimeParams::make(3))), (AutocorrSpectrum{{6, 1}, {-6, 1}, {2, 2}, {-2, 2}}));
    EXPECT_EQ(predicted_spectrum(17), (AutocorrSpectrum{{34, 1}, {30, 1}, {-2, 32}}));
    EXPECT_EQ(predicted_spectrum(19), (AutocorrSpectrum{{38, 1}, {-38, 1}, {2, 18}, {-2, 18}}));
    EXPECT_FALSE(predicted_spectrum(5).has_value());
    EXPECT_FALSE(predicted_spectrum(7).has_value());
    EXPECT_THROW(predicted_spectrum(9), ArgumentError);
}

// C(w) = C(N - w), counts sum to N, and sum_w C(w) = (N - 2 wt)^2.
TEST(Spectrum, Identities) {
    std::mt19937 rng(7);
    auto check = [](const BinarySequence& s) {
        const i64 n = static_cast<i64>(s.size());
        i64 total = 0, count = 0;
        for (i64 w = 0; w < n; ++w) {
            EXPECT_EQ(autocorrelation(s, w), autocorrelation(s, (n - w) % n));
            total += autocorrelation(s, w);
        }
        for (auto [v, c] : autocorr_spectrum(s)) count += c;
        EXPECT_EQ(count, n);
        const i64 bal = n - 2 * static_cast<i64>(s.weight());
        EXPECT_EQ(total, bal * bal);
    };
    for (i64 p : odd_primes_in(3, 120)) check(generate(PrimeParams::make(p)));
    for (int iter = 0; iter < 50; ++iter) {
        std::string bits(rng() % 40 + 1, '0');
        for (auto& c : bits) c = rng() % 2 ? '1' : '0';
        check(BinarySequence::from_string(bits));
    }
}

TEST(Spectrum, TableRowsUpTo200) {
    for (i64 p : odd_primes_in(3, 200)) {
        const auto pred = predicted_spectrum(p);
        if (!pred) continue;
        EXPECT_EQ(autocorr_spectrum(generate(PrimeParams::make(p))), *pred) << p;
    }
}

} // namespace gcseq
