#include <gtest/gtest.h>

#include <random>

#include "invlab/arith.hpp"
#include "invlab/error.hpp"
#include "invlab/groups.hpp"
#include "oracles.hpp"

using namespace invlab;
using namespace invlab::groups;
using arith::factorize;

namespace {

std::vector<u64> sorted(std::vector<u64> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(CyclicOrders, Examples) {
    EXPECT_EQ(sorted(unit_group_cyclic_orders(factorize(8)).orders), (std::vector<u64>{2, 2}));
    EXPECT_EQ(sorted(unit_group_cyclic_orders(factorize(30)).orders), (std::vector<u64>{1, 2, 4}));
    EXPECT_EQ(sorted(unit_group_cyclic_orders(factorize(63)).orders), (std::vector<u64>{6, 6}));
    EXPECT_TRUE(unit_group_cyclic_orders(factorize(1)).orders.empty());
    EXPECT_EQ(sorted(unit_group_cyclic_orders(factorize(4)).orders), (std::vector<u64>{2}));
    EXPECT_EQ(sorted(unit_group_cyclic_orders(factorize(32)).orders), (std::vector<u64>{2, 8}));
}

TEST(InvariantFactors, Examples) {
    EXPECT_EQ(invariant_factors({{6, 10, 15}}).chain, (std::vector<u64>{30, 30}));
    EXPECT_TRUE(invariant_factors({{1}}).chain.empty());
    EXPECT_TRUE(invariant_factors({{}}).chain.empty());
    EXPECT_EQ(invariant_factors({{1, 2, 4}}).chain, (std::vector<u64>{2, 4}));
    EXPECT_EQ(invariant_factors({{1, 2, 4}}).chain,
              oracle::chain_from_orders(oracle::product_group_element_orders({1, 2, 4})));
}

TEST(InvariantFactors, MatchesElementOrderOracle) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const unsigned len = 1 + rng() % 3;
        std::vector<u64> ms;
        u64 size = 1;
        for (unsigned j = 0; j < len; ++j) {
            ms.push_back(1 + rng() % 24);
            size *= ms.back();
        }
        if (size > 4000) continue;
        const auto got = invariant_factors({ms});
        ASSERT_EQ(got.chain, oracle::chain_from_orders(oracle::product_group_element_orders(ms)));
        ASSERT_EQ(got.order(), size);
        for (std::size_t k = 1; k < got.chain.size(); ++k) ASSERT_EQ(got.chain[k] % got.chain[k - 1], 0u);
        for (u64 d : got.chain) ASSERT_GE(d, 2u);
    }
}

TEST(Lambda1, SpecExamples) {
    EXPECT_EQ(lambda1(1), 1u);
    EXPECT_EQ(lambda1(2), 1u);
    EXPECT_EQ(lambda1(5), 4u);
    EXPECT_EQ(lambda1(63), 6u);
    EXPECT_EQ(lambda1(8), 2u);
    EXPECT_EQ(oracle::lambda1(5), 4u);
    EXPECT_EQ(oracle::lambda1(63), 6u);
    EXPECT_EQ(oracle::lambda1(8), 2u);
    EXPECT_EQ(unit_group_structure(63).chain, (std::vector<u64>{6, 6}));
    EXPECT_EQ(unit_group_structure(8).chain, (std::vector<u64>{2, 2}));
    EXPECT_TRUE(unit_group_structure(1).chain.empty());
}

TEST(Lambda1, MatchesElementOrderOracle) {
    for (u64 n = 1; n <= 5000; ++n) {
        const auto chain = oracle::chain_from_orders(oracle::unit_group_element_orders(n));
        ASSERT_EQ(unit_group_structure(n).chain, chain) << n;
        ASSERT_EQ(lambda1(n), oracle::lambda1(n)) << n;
        ASSERT_EQ(carmichael(n), oracle::carmichael(n)) << n;
        ASSERT_EQ(least_primary_factor(n), oracle::least_primary(n)) << n;
    }
}

TEST(Carmichael, Examples) {
    EXPECT_EQ(carmichael(8), 2u);
    EXPECT_EQ(carmichael(30), 4u);
    EXPECT_EQ(carmichael(7), 6u);
    EXPECT_EQ(carmichael(1), 1u);
    EXPECT_EQ(carmichael(2), 1u);
}

TEST(LeastPrimary, Examples) {
    EXPECT_EQ(least_primary_factor(8), 2u);
    EXPECT_EQ(least_primary_factor(5), 4u);
    EXPECT_EQ(least_primary_factor(25), 4u);
    EXPECT_EQ(least_primary_factor(1), 1u);
    EXPECT_EQ(oracle::least_primary(25), 4u);
}

TEST(LeastPrimary, Characterization) {
    for (u64 n = 1; n <= 100000; ++n) {
        const auto f = factorize(n);
        bool expect = n % 4 != 0;
        for (const auto& pp : f.factors) {
            if (pp.prime != 2 && pp.prime % 4 != 1) expect = false;
        }
        ASSERT_EQ(least_primary_factor(n) != 2, expect) << n;
    }
}

TEST(Lambda1, EvenForNAtLeastThree) {
    for (u64 n = 3; n <= 1'000'000; ++n) ASSERT_EQ(lambda1(n) % 2, 0u) << n;
}

TEST(Lambda1, HalvingIsomorphism) {
    for (u64 n = 2; n <= 200000; n += 4) {
        ASSERT_EQ(unit_group_structure(n).chain, unit_group_structure(n / 2).chain) << n;
    }
}

TEST(Structural, Examples) {
    EXPECT_TRUE(q_divides_lambda1_structural({{30, 30}}, 30));
    // gcd(6, 10, 15) = 1: the criterion does not apply, but the chain still gives 30.
    EXPECT_THROW(q_divides_lambda1_structural({{6, 10, 15}}, 30), PreconditionError);
    EXPECT_EQ(invariant_factors({{6, 10, 15}}).smallest(), 30u);
    EXPECT_FALSE(q_divides_lambda1_structural({{2, 4}}, 4));
    EXPECT_THROW(q_divides_lambda1_structural({{2, 3}}, 2), PreconditionError);
}

TEST(Structural, RandomSharedPrime) {
    std::mt19937_64 rng(3);
    int tested = 0;
    while (tested < 10000) {
        const unsigned len = 1 + rng() % 4;
        std::vector<u64> ms;
        for (unsigned j = 0; j < len; ++j) ms.push_back(2 + rng() % 59);
        u64 g = 0;
        for (u64 m : ms) g = std::gcd(g, m);
        if (g <= 1) continue;
        const u64 q = 2 + rng() % 29;
        const bool all = std::all_of(ms.begin(), ms.end(), [q](u64 m) { return m % q == 0; });
        ASSERT_EQ(q_divides_lambda1_structural({ms}, q), all);
        ++tested;
    }
}

TEST(Structural, SpecialTwoCorollary) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        std::vector<u64> ms{2};
        const unsigned len = rng() % 4;
        for (unsigned j = 0; j < len; ++j) ms.push_back(2 * (1 + rng() % 40));
        ASSERT_EQ(invariant_factors({ms}).smallest(), 2u);
    }
}

TEST(FastPredicate, Examples) {
    EXPECT_TRUE(divides_lambda1_fast(factorize(5), 4));
    EXPECT_TRUE(divides_lambda1_fast(factorize(63), 6));
    EXPECT_FALSE(divides_lambda1_fast(factorize(21), 6));
    EXPECT_EQ(oracle::lambda1(21), 2u);
    EXPECT_FALSE(divides_lambda1_fast(factorize(1), 4));
    EXPECT_FALSE(divides_lambda1_fast(factorize(2), 4));
    EXPECT_THROW(DivisibilityPredicate(5), DomainError);
    EXPECT_THROW(DivisibilityPredicate(2), DomainError);
}

TEST(FastPredicate, MatchesChainSmallRange) {
    for (u64 n = 1; n <= 100000; ++n) {
        const auto f = factorize(n);
        const u64 l1 = lambda1(f);
        for (u64 q = 4; q <= 40; q += 2) ASSERT_EQ(divides_lambda1_fast(f, q), l1 % q == 0) << n << " " << q;
    }
}

TEST(Accumulator, MatchesChain) {
    for (u64 n = 1; n <= 1'000'000; ++n) {
        const auto f = factorize(n);
        Lambda1Accumulator acc;
        for (const auto& pp : f.factors) acc.add(pp.prime, pp.exponent);
        ASSERT_EQ(acc.value(), lambda1(f)) << n;
        ASSERT_EQ(acc.least_primary_is_two(), least_primary_factor(n) == 2) << n;
    }
}
