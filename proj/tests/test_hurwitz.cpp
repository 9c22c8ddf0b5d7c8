#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "gpfree/enumeration.hpp"
#include "gpfree/factorization.hpp"
#include "gpfree/hurwitz.hpp"
#include "oracles.hpp"

using namespace gpfree;

namespace {

HurwitzInt half(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return HurwitzInt::from_doubled(a, b, c, d);
}

}  // namespace

TEST(Hurwitz, RejectsMixedParity) {
    EXPECT_THROW(HurwitzInt::from_doubled(1, 0, 1, 1), std::invalid_argument);
    EXPECT_NO_THROW(HurwitzInt::from_doubled(1, -1, 1, 3));
}

TEST(Hurwitz, QuaternionRelations) {
    const auto i = HurwitzInt::integral(0, 1), j = HurwitzInt::integral(0, 0, 1), k = HurwitzInt::integral(0, 0, 0, 1);
    const auto minus_one = HurwitzInt::integral(-1);
    EXPECT_EQ(i * i, minus_one);
    EXPECT_EQ(j * j, minus_one);
    EXPECT_EQ(k * k, minus_one);
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * i, -k);
    EXPECT_EQ(i * j * k, minus_one);
}

TEST(Hurwitz, OmegaIsCubeRootOfMinusOne) {
    const auto w = half(1, 1, 1, 1);
    EXPECT_EQ(w * w, half(-1, 1, 1, 1));
    EXPECT_EQ(w * w * w, HurwitzInt::integral(-1));
}

TEST(Hurwitz, TwentyFourUnits) {
    const auto& us = units();
    ASSERT_EQ(us.size(), 24u);
    EXPECT_TRUE(std::is_sorted(us.begin(), us.end()));
    for (const auto& u : us) {
        EXPECT_TRUE(is_unit(u));
        EXPECT_EQ(u * unit_inverse(u), HurwitzInt::integral(1));
    }
    // Closed under multiplication.
    const std::set<HurwitzInt> group(us.begin(), us.end());
    for (const auto& u : us)
        for (const auto& v : us) EXPECT_TRUE(group.contains(u * v));
}

TEST(Hurwitz, PrimesByNorm) {
    EXPECT_TRUE(is_prime(HurwitzInt::integral(1, 1)));
    EXPECT_TRUE(is_prime(half(1, 1, 1, 3)));  // norm 3
    EXPECT_FALSE(is_prime(HurwitzInt::integral(2)));
    EXPECT_FALSE(is_prime(HurwitzInt::integral(1)));
}

TEST(HurwitzProperty, NormIsMultiplicative) {
    oracle::QuatGen gen(11);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto p = gen(40), q = gen(40);
        EXPECT_EQ(norm(p * q), norm(p) * norm(q));
    }
}

TEST(HurwitzProperty, ProductsStayInTheOrder) {
    oracle::QuatGen gen(12);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto pq = gen(60) * gen(60);
        const auto& d = pq.doubled();
        // from_doubled re-validates the shared parity.
        EXPECT_NO_THROW(HurwitzInt::from_doubled(d[0], d[1], d[2], d[3]));
    }
}

TEST(HurwitzProperty, AssociativeAndConjugateReverses) {
    oracle::QuatGen gen(13);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = gen(20), b = gen(20), c = gen(20);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a * b).conj(), b.conj() * a.conj());
        EXPECT_EQ(a * a.conj(), HurwitzInt::integral(norm(a)));
    }
}

TEST(HurwitzProperty, LeftDivideRoundTrip) {
    oracle::QuatGen gen(14);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto a = gen.nonzero(30), r = gen(30);
        const auto got = left_divide(a, a * r);
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(*got, r);
    }
}

TEST(HurwitzProperty, LeftDivideRejectsNonMultiples) {
    const auto two = HurwitzInt::integral(2);
    EXPECT_FALSE(left_divide(two, HurwitzInt::integral(1)).has_value());
    EXPECT_FALSE(left_divide(two, HurwitzInt::integral(1, 1)).has_value());
    EXPECT_THROW(left_divide(HurwitzInt(), two), std::domain_error);
    // 1+i divides 2 on the left.
    EXPECT_EQ(left_divide(HurwitzInt::integral(1, 1), two), HurwitzInt::integral(1, -1));
}

TEST(HurwitzProperty, GpTripleDetection) {
    oracle::QuatGen gen(15);
    for (int trial = 0; trial < 3000; ++trial) {
        const auto a = gen.nonzero(10), r = gen(6);
        const bool expect = norm(r) >= 2;
        EXPECT_EQ(is_gp_triple(a, a * r, a * r * r), expect);
    }
    EXPECT_FALSE(is_gp_triple(HurwitzInt(), HurwitzInt(), HurwitzInt()));
}

TEST(HurwitzProperty, GpTripleUnitScaling) {
    // Left-multiplying all three terms by a unit keeps a progression a progression.
    oracle::QuatGen gen(16);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = gen.nonzero(8), r = gen(5);
        if (norm(r) < 2) continue;
        for (const auto& u : units()) EXPECT_TRUE(is_gp_triple(u * a, u * a * r, u * a * r * r));
    }
}

TEST(HurwitzProperty, UnitMigration) {
    // p u = (u u^-1 p u): a unit moves across a factor, conjugating it, without changing its norm.
    oracle::QuatGen gen(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = gen(20);
        for (const auto& u : units()) {
            const auto moved = unit_inverse(u) * p * u;
            EXPECT_EQ(p * u, u * moved);
            EXPECT_EQ(norm(moved), norm(p));
        }
    }
}

TEST(Factorization, PrimeFactors) {
    EXPECT_EQ(prime_factors(1), std::vector<std::int64_t>{});
    EXPECT_EQ(prime_factors(60), (std::vector<std::int64_t>{2, 2, 3, 5}));
    EXPECT_THROW(prime_factors(0), std::invalid_argument);
}

TEST(FactorizationProperty, EveryOrderingUpToNorm100) {
    for (std::int64_t n = 2; n <= 100; ++n) {
        auto primes = prime_factors(n);
        const auto shell = enumerate_norm(n);
        do {
            for (const auto& q : shell) {
                const auto f = factor_modelled(q, primes);
                ASSERT_EQ(f.factors.size(), primes.size());
                for (std::size_t i = 0; i < primes.size(); ++i) ASSERT_EQ(norm(f.factors[i]), primes[i]);
                ASSERT_EQ(f.product(), q) << "norm " << n;
            }
        } while (std::next_permutation(primes.begin(), primes.end()));
    }
}

TEST(Factorization, RejectsBadModels) {
    const auto q = HurwitzInt::integral(1, 1, 1);  // norm 3
    EXPECT_THROW(factor_modelled(q, {2}), std::invalid_argument);
    EXPECT_THROW(factor_modelled(q, {}), std::invalid_argument);
    EXPECT_THROW(factor_modelled(HurwitzInt::integral(2), {4}), std::invalid_argument);
    EXPECT_THROW(factor_modelled(HurwitzInt(), {2}), std::invalid_argument);
}
