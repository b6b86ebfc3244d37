#include <random>

#include <gtest/gtest.h>

#include "harmval/arith.hpp"
#include "harmval/harmonic.hpp"

using namespace harmval;

namespace {

// Oracle: strip factors of p one exact division at a time.
long strip_count(BigInt x, unsigned long p) {
    long v = 0;
    while (x != 0 && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

BigRat random_nonzero_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-100000, 100000);
    long num = 0;
    while (num == 0) num = dist(rng);
    long den = 0;
    while (den == 0) den = dist(rng);
    return BigRat(BigInt(num), BigInt(den));
}

}  // namespace

TEST(BigRat, StoredReducedWithPositiveDenominator) {
    const BigRat r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(BigRat(BigInt(8), BigInt(4)).to_string(), "2");
    EXPECT_THROW(BigRat(BigInt(1), BigInt(0)), std::domain_error);
    EXPECT_THROW(BigRat(0).inverse(), std::domain_error);
}

TEST(BigRat, ParseAndPow) {
    EXPECT_EQ(BigRat::parse("208/9"), BigRat(BigInt(208), BigInt(9)));
    EXPECT_EQ(BigRat::parse("-12/8").to_string(), "-3/2");
    EXPECT_THROW(BigRat::parse("x/2"), std::invalid_argument);
    EXPECT_EQ(BigRat::parse("-2/3").pow(3).to_string(), "-8/27");
    EXPECT_EQ(BigRat::parse("-2/3").pow(-2).to_string(), "9/4");
    EXPECT_EQ(BigRat(5).pow(0), BigRat(1));
}

TEST(Valuation, Examples) {
    EXPECT_EQ(valuation_p(2, BigRat(8)), Valuation::finite(3));
    EXPECT_EQ(valuation_p(3, BigRat(1)), Valuation::finite(0));
    const BigRat r(BigInt(208), BigInt(9));
    EXPECT_EQ(valuation_p(2, r), Valuation::finite(strip_count(208, 2) - strip_count(9, 2)));
    EXPECT_EQ(valuation_p(2, r), Valuation::finite(4));
    EXPECT_EQ(valuation_p(3, r), Valuation::finite(-2));
    EXPECT_TRUE(valuation_p(5, BigRat(0)).is_infinite());
    EXPECT_THROW(valuation_p(4, BigRat(8)), std::domain_error);
    EXPECT_THROW(valuation_p(1, BigRat(8)), std::domain_error);
}

TEST(Valuation, InfinityOrdering) {
    const auto inf = Valuation::infinite();
    EXPECT_GT(inf, Valuation::finite(1000000));
    EXPECT_TRUE(inf >= 5L);
    EXPECT_TRUE(Valuation::finite(2) >= 2L);
    EXPECT_FALSE(Valuation::finite(1) >= 2L);
    EXPECT_TRUE((inf - 7).is_infinite());
    EXPECT_EQ(inf.to_string(), "inf");
    EXPECT_THROW((void)inf.value(), std::logic_error);
}

TEST(Valuation, ScalingAdditivityUltrametric) {
    std::mt19937_64 rng(20261019);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        const BigRat prime(static_cast<long>(p));
        for (int trial = 0; trial < 200; ++trial) {
            const BigRat r = random_nonzero_rat(rng);
            const BigRat s = random_nonzero_rat(rng);
            const Valuation vr = valuation_p(p, r);
            const Valuation vs = valuation_p(p, s);
            for (long k : {-3L, 0L, 1L, 5L}) EXPECT_EQ(valuation_p(p, r * prime.pow(k)), vr + k);
            EXPECT_EQ(valuation_p(p, r * s), vr + vs.value());
            if (!(r + s).is_zero()) EXPECT_GE(valuation_p(p, r + s), std::min(vr, vs));
        }
    }
}

TEST(DigitSum, Examples) {
    EXPECT_EQ(digit_sum_p(2, 8), 1u);
    EXPECT_EQ(digit_sum_p(2, 7), 3u);
    EXPECT_EQ(digit_sum_p(3, 17), 5u);  // 17 = 122 in base 3
    EXPECT_THROW(digit_sum_p(2, 0), std::domain_error);
    EXPECT_THROW(digit_sum_p(9, 10), std::domain_error);
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre_valuation(2, 4), static_cast<std::uint64_t>(strip_count(24, 2)));
    EXPECT_EQ(legendre_valuation(2, 4), 3u);
    EXPECT_EQ(legendre_valuation(2, 1), 0u);
    EXPECT_EQ(legendre_valuation(5, 25), 25u / 5 + 25u / 25);
    EXPECT_EQ(legendre_valuation(5, 25), 6u);
}

TEST(Legendre, MatchesExplicitFactorial) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        BigInt fact = 1;
        for (std::uint64_t n = 1; n <= 300; ++n) {
            fact *= static_cast<unsigned long>(n);
            ASSERT_EQ(static_cast<long>(legendre_valuation(p, n)), strip_count(fact, p)) << "p=" << p << " n=" << n;
        }
    }
}

TEST(LcmValuation, Examples) {
    EXPECT_EQ(lcm_valuation(2, 4), 2u);
    EXPECT_EQ(lcm_valuation(2, 7), 2u);
    EXPECT_EQ(lcm_valuation(2, 1), 0u);
    BigInt l = 1;
    for (unsigned long k = 2; k <= 100; ++k) l = l / gcd(l, BigInt(k)) * k;
    EXPECT_EQ(lcm_valuation(3, 100), static_cast<std::uint64_t>(strip_count(l, 3)));
    EXPECT_EQ(lcm_valuation(3, 100), 4u);
}

TEST(LcmValuation, ExactAtPowersAndNoOverflow) {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        std::uint64_t pk = 1;
        for (std::uint64_t k = 0; pk <= (std::uint64_t{1} << 62) / p; ++k, pk *= p) {
            EXPECT_EQ(lcm_valuation(p, pk), k);
            if (pk > 1) EXPECT_EQ(lcm_valuation(p, pk - 1), k - 1);
        }
    }
    EXPECT_EQ(lcm_valuation(2, ~std::uint64_t{0}), 63u);
    EXPECT_EQ(lcm_valuation(2, std::uint64_t{1} << 63), 63u);
}

TEST(DoubleFactorial, Examples) {
    EXPECT_EQ(double_factorial_odd(1), 1);
    EXPECT_EQ(double_factorial_odd(3), factorial(6) / (8 * factorial(3)));
    EXPECT_EQ(double_factorial_odd(3), 15);
    EXPECT_EQ(double_factorial_odd(4), 105);
    for (std::uint64_t n = 1; n <= 60; ++n) {
        EXPECT_EQ(double_factorial_odd(n) * ipow(2, n) * factorial(n), factorial(2 * n));
    }
}

TEST(IsPrime, SmallRangeAgreesWithTrialDivision) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    EXPECT_FALSE(is_prime(0));
    for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
}

TEST(IsPrime, LargeInputs) {
    EXPECT_TRUE(is_prime(18446744073709551557ULL));   // largest 64-bit prime
    EXPECT_FALSE(is_prime(18446744073709551615ULL));
    EXPECT_FALSE(is_prime(3215031751ULL));            // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_FALSE(is_prime(3825123056546413051ULL));   // strong pseudoprime to bases up to 23
    EXPECT_TRUE(is_prime(1000000007ULL));
    EXPECT_FALSE(is_prime(4294967297ULL));            // 641 * 6700417
}

TEST(Harmonic, Examples) {
    HarmonicTable h;
    EXPECT_EQ(harmonic(h, 0), BigRat(0));
    EXPECT_EQ(harmonic(h, 1), BigRat(1));
    EXPECT_EQ(harmonic(h, 3), BigRat(1) + BigRat(BigInt(1), BigInt(2)) + BigRat(BigInt(1), BigInt(3)));
    EXPECT_EQ(harmonic(h, 3).to_string(), "11/6");
    EXPECT_EQ(h.max_index(), 3u);
    EXPECT_THROW((void)h.at(4), std::out_of_range);
}

TEST(Harmonic, TelescopesOverLongExtension) {
    HarmonicTable h;
    h.extend_to(400);
    for (std::size_t k = 1; k <= 400; ++k) {
        ASSERT_EQ(h.at(k) - h.at(k - 1), BigRat(BigInt(1), BigInt(static_cast<unsigned long>(k))));
    }
    // extension is idempotent and incremental
    h.extend_to(10);
    EXPECT_EQ(h.max_index(), 400u);
}
