#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "gcseq/bignat.hpp"
#include "gcseq/ntcore.hpp"

namespace gcseq {

TEST(ModPow, Examples) {
    EXPECT_EQ(mod_pow(2, 10, 1023), 1u);
    EXPECT_EQ(mod_pow(3, 4, 10), 1u);
    EXPECT_EQ(mod_pow(7, 0, 10), 1u);
    EXPECT_EQ(mod_pow(-1, 3, 7), 6u);
    EXPECT_THROW(mod_pow(2, 3, 1), ArgumentError);
}

TEST(ModPow, AgreesWithRepeatedMultiplication) {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        const i64 m = static_cast<i64>(rng() % 5000) + 2;
        const i64 b = static_cast<i64>(rng() % 10000) - 5000;
        const u64 e = rng() % 40;
        i64 acc = 1 % m;
        for (u64 i = 0; i < e; ++i) acc = (acc * (((b % m) + m) % m)) % m;
        EXPECT_EQ(mod_pow(b, e, m), static_cast<u64>(acc)) << b << "^" << e << " mod " << m;
    }
}

TEST(IsPrime, Examples) {
    EXPECT_TRUE(is_prime(113));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1023));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(18446744073709551557ull)); // largest 64-bit prime
    EXPECT_FALSE(is_prime(3215031751ull));          // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(IsPrime, MatchesSieve) {
    constexpr int n = 20000;
    std::vector<bool> composite(n, false);
    for (int i = 2; i * i < n; ++i)
        if (!composite[i])
            for (int j = i * i; j < n; j += i) composite[j] = true;
    for (int i = 0; i < n; ++i) EXPECT_EQ(is_prime(static_cast<u64>(i)), i >= 2 && !composite[i]) << i;
}

TEST(Factorize, RebuildsInput) {
    EXPECT_EQ(factorize(1023), (std::vector<std::pair<u64, unsigned>>{{3, 1}, {11, 1}, {31, 1}}));
    EXPECT_EQ(factorize(16383), (std::vector<std::pair<u64, unsigned>>{{3, 1}, {43, 1}, {127, 1}}));
    for (u64 n = 1; n < 3000; ++n) {
        u64 prod = 1;
        for (auto [q, e] : factorize(n)) {
            EXPECT_TRUE(is_prime(q));
            for (unsigned i = 0; i < e; ++i) prod *= q;
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(EulerPhi, CountsUnits) {
    for (u64 n = 1; n < 500; ++n) {
        u64 count = 0;
        for (u64 a = 1; a <= n; ++a)
            if (std::gcd(a, n) == 1) ++count;
        EXPECT_EQ(euler_phi(n), count) << n;
    }
}

TEST(ModInverse, RoundTripsAndRejects) {
    for (i64 m : {7, 10, 26, 226}) {
        for (i64 a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) {
                EXPECT_THROW(mod_inverse(a, m), ArgumentError);
                continue;
            }
            EXPECT_EQ((a * static_cast<i64>(mod_inverse(a, m))) % m, 1);
        }
    }
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(2, 7), 1);
    EXPECT_EQ(legendre(3, 5), -1);
    EXPECT_EQ(legendre(10, 5), 0);
    EXPECT_EQ(legendre(-1, 5), 1);
    EXPECT_EQ(legendre(-1, 7), -1);
    for (i64 p : {3, 5, 13, 113}) EXPECT_EQ(legendre(1, p), 1);
    EXPECT_THROW(legendre(2, 9), ArgumentError);
    EXPECT_THROW(legendre(2, 2), ArgumentError);
}

TEST(Legendre, MultiplicativeAndMatchesSquares) {
    for (i64 p : odd_primes_in(3, 100)) {
        std::vector<bool> square(static_cast<std::size_t>(p), false);
        for (i64 x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;
        for (i64 a = 1; a < p; ++a) {
            EXPECT_EQ(legendre(a, p), square[static_cast<std::size_t>(a)] ? 1 : -1);
            for (i64 b = 1; b < p; b += 3) EXPECT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
        }
        // second supplement: 2 is a residue iff p = +-1 mod 8
        EXPECT_EQ(legendre(2, p) == 1, p % 8 == 1 || p % 8 == 7) << p;
    }
}

TEST(MultOrder, Examples) {
    EXPECT_EQ(mult_order(5, 13), 4u);
    EXPECT_EQ(mult_order(1, 9), 1u);
    EXPECT_EQ(mult_order(3, 10), 4u);
    EXPECT_EQ(mult_order(7, 113), 14u);
    EXPECT_THROW(mult_order(2, 10), ArgumentError);
}

TEST(CommonPrimitiveRoot, Examples) {
    EXPECT_EQ(find_common_primitive_root(5), 3);
    EXPECT_EQ(find_common_primitive_root(17), 3);
    EXPECT_EQ(find_common_primitive_root(13), 7);
    EXPECT_EQ(find_common_primitive_root(3), 5);
    EXPECT_EQ(find_common_primitive_root(113), 3);
    EXPECT_THROW(find_common_primitive_root(9), ArgumentError);
}

TEST(CommonPrimitiveRoot, OrderIsFullModBoth) {
    for (i64 p : odd_primes_in(3, 400)) {
        const i64 g = find_common_primitive_root(p);
        EXPECT_EQ(g % 2, 1);
        EXPECT_EQ(mult_order(g, p), static_cast<u64>(p - 1));
        EXPECT_EQ(mult_order(g, 2 * p), static_cast<u64>(p - 1));
    }
}

TEST(Crt2p, Examples) {
    EXPECT_EQ(crt_2p(3, 1, 5), 3);
    EXPECT_EQ(crt_2p(0, 0, 7), 0);
    EXPECT_EQ(crt_2p(1, 1, 5), 1);
    EXPECT_THROW(crt_2p(5, 0, 5), ArgumentError);
    EXPECT_THROW(crt_2p(1, 2, 5), ArgumentError);
}

TEST(Crt2p, RoundTrip) {
    for (i64 p : odd_primes_in(3, 60))
        for (i64 x = 0; x < 2 * p; ++x) EXPECT_EQ(crt_2p(x % p, x % 2, p), x);
}

TEST(PrimeParams, ValidatesGenerator) {
    const auto pp = PrimeParams::make(5, 3);
    EXPECT_EQ(pp.N, 10);
    EXPECT_EQ(pp.p_mod_8, 5);
    EXPECT_FALSE(pp.two_is_residue());
    EXPECT_EQ(PrimeParams::make(113).g, 3);
    EXPECT_THROW(PrimeParams::make(113, 7), ArgumentError); // order 14
    EXPECT_THROW(PrimeParams::make(5, 2), ArgumentError);   // even
    EXPECT_THROW(PrimeParams::make(5, 13), ArgumentError);  // out of range
    EXPECT_THROW(PrimeParams::make(4), ArgumentError);
    EXPECT_THROW(PrimeParams::make(2), ArgumentError);
}

TEST(OddPrimesIn, Ranges) {
    EXPECT_EQ(odd_primes_in(1, 20), (std::vector<i64>{3, 5, 7, 11, 13, 17, 19}));
    EXPECT_TRUE(odd_primes_in(60, 50).empty());
    EXPECT_TRUE(odd_primes_in(24, 28).empty());
}

TEST(BigNat, Examples) {
    EXPECT_EQ(big_gcd(BigNat(217), BigNat(1023)), BigNat(31));
    EXPECT_EQ(big_gcd(BigNat(13417), BigNat(16383)), BigNat(1));
    EXPECT_EQ(big_gcd(BigNat(42), BigNat(0)), BigNat(42));
    EXPECT_EQ(big_gcd(BigNat(0), BigNat(42)), BigNat(42));
    EXPECT_THROW(big_gcd(BigNat(0), BigNat(0)), ArgumentError);
    EXPECT_EQ(BigNat::mersenne(10), BigNat(1023));
    EXPECT_EQ(BigNat::from_decimal("18446744073709551617").to_string(), "18446744073709551617");
    EXPECT_THROW(BigNat::from_decimal("12a"), ArgumentError);
    EXPECT_THROW(BigNat(3) - BigNat(4), ArgumentError);
    EXPECT_THROW(BigNat(3) / BigNat(0), ArgumentError);
    EXPECT_EQ(BigNat(1023).floor_log2(), 9u);
    EXPECT_EQ(BigNat(33).floor_log2(), 5u);
}

// Subtraction-only Euclid as an independent oracle.
TEST(BigNat, GcdMatchesSubtractionOracle) {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 2000; ++iter) {
        u64 a = rng() % 10000 + 1, b = rng() % 10000 + 1;
        const BigNat got = big_gcd(BigNat(a), BigNat(b));
        while (a != b) (a > b ? a : b) -= (a > b ? b : a);
        EXPECT_EQ(got, BigNat(a));
    }
}

TEST(BigNat, LargeGcdDividesBoth) {
    const BigNat a = BigNat::mersenne(226), b = BigNat::mersenne(113);
    const BigNat g = big_gcd(a, b);
    EXPECT_EQ(g, b); // 2^113 - 1 divides 2^226 - 1
    EXPECT_TRUE((a % g).is_zero());
}

} // namespace gcseq
