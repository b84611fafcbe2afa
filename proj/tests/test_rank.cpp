#include <gtest/gtest.h>

#include "geom/gallery.hpp"
#include "geom/rank.hpp"
#include "geom/report.hpp"
#include "oracles.hpp"

using namespace geom;

namespace {

PointSet set_of(std::size_t n, const std::vector<Point>& v) { return PointSet(n, std::span<const Point>(v)); }

std::size_t brute_max_independent(const Geometry& g) {
    std::size_t best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n_points()); ++m) {
        const auto k = static_cast<std::size_t>(__builtin_popcountll(m));
        if (k > best && oracle::independent_by_definition(g, oracle::from_mask(m))) best = k;
    }
    return best;
}

}  // namespace

TEST(Independence, Example2Sets) {
    const Example2Labels L{4};
    const Geometry g = example2(4);
    const PointSet C = set_of(9, L.C());
    EXPECT_TRUE(is_independent(g, C));
    EXPECT_FALSE(is_generating(g, C));
    for (std::size_t i = 1; i <= 4; ++i) {
        const PointSet Cb = set_of(9, L.C_b(i));
        EXPECT_TRUE(is_independent(g, Cb)) << i;
        EXPECT_FALSE(is_generating(g, Cb)) << i;
        // Maximal: adding any point breaks independence.
        Cb.complement().for_each([&](Point p) { EXPECT_FALSE(is_independent(g, Cb.with(p))) << i << " + " << p; });
    }
    C.complement().for_each([&](Point p) { EXPECT_FALSE(is_independent(g, C.with(p))) << p; });
    EXPECT_TRUE(is_basis(g, PointSet(9, {L.a(), L.b(1), L.b(2)})));
    EXPECT_TRUE(is_independent(g, g.empty_set()));
}

TEST(Independence, MatchesDefinitionOnAllSubsets) {
    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 8;
        const Geometry g = oracle::random_geometry(rng, n, rng() % 10);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
            ASSERT_EQ(is_independent(g, PointSet::from_mask(n, m)),
                      oracle::independent_by_definition(g, oracle::from_mask(m)))
                << "mask " << m;
    }
}

TEST(GreedyBasis, GeneratesAndIsIndependentUnderEP) {
    std::mt19937 rng(23);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 9;
        const Geometry g = oracle::random_geometry(rng, n, rng() % 12);
        OrderedPointList order = ascending_order(g);
        std::shuffle(order.begin(), order.end(), rng);
        const OrderedPointList b = greedy_basis(g, order);
        const PointSet bs = set_of(n, b);
        EXPECT_TRUE(is_generating(g, bs));
        if (check_exchange_property(g).status == EPStatus::holds) {
            EXPECT_TRUE(is_independent(g, bs));
        }
    }
    EXPECT_THROW(greedy_basis(fano(), {0, 1, 1, 2, 3, 4, 5}), InvalidPoint);
}

// With C listed first the greedy pass keeps C and then a; that set generates
// but is not independent, since the exchange property fails here.
TEST(GreedyBasis, Example2OrderStartingWithC) {
    const Example2Labels L{4};
    const Geometry g = example2(4);
    OrderedPointList order = L.C();
    order.push_back(L.a());
    for (auto b : L.B()) order.push_back(b);
    const OrderedPointList got = greedy_basis(g, order);
    OrderedPointList want = L.C();
    want.push_back(L.a());
    EXPECT_EQ(got, want);
    EXPECT_TRUE(is_generating(g, set_of(9, got)));
    EXPECT_FALSE(is_independent(g, set_of(9, got)));
}

TEST(GeneratingRank, MatchesBruteForce) {
    std::mt19937 rng(29);
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = 1 + rng() % 10;
        const Geometry g = oracle::random_geometry(rng, n, rng() % 14);
        const GeneratingRank r = generating_rank(g);
        ASSERT_EQ(r.value, oracle::rk_gen(g));
        EXPECT_EQ(r.witness.size(), r.value);
        EXPECT_TRUE(oracle::generates(g, oracle::Set(r.witness.begin(), r.witness.end())));
    }
}

TEST(GeneratingRank, Examples) {
    EXPECT_EQ(generating_rank(fano()).value, 3u);
    EXPECT_EQ(generating_rank(projective_space(3, 2)).value, 4u);
    EXPECT_EQ(generating_rank(discrete_geometry(4)).value, 4u);
    for (std::size_t n = 3; n <= 6; ++n) EXPECT_EQ(generating_rank(example2(n)).value, 3u) << n;
}

TEST(GeneratingRank, BudgetExhaustionCarriesBounds) {
    Budget tiny;
    tiny.span_calls = 5;
    try {
        generating_rank(projective_space(3, 3), tiny);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_GE(e.lower(), 1u);
        EXPECT_LE(e.lower(), e.upper());
        EXPECT_GE(e.upper(), 4u);
    }
}

TEST(MaximumIndependent, MatchesBruteForce) {
    std::mt19937 rng(31);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 8;
        const Geometry g = oracle::random_geometry(rng, n, rng() % 10);
        const IndependenceResult r = maximum_independent_set(g);
        ASSERT_TRUE(r.exact);
        EXPECT_EQ(r.witness.size(), brute_max_independent(g));
        EXPECT_TRUE(is_independent(g, set_of(n, r.witness)));
    }
}

TEST(MaximumIndependent, Example2HasSizeN) {
    for (std::size_t n = 3; n <= 5; ++n) {
        const Geometry g = example2(n);
        const IndependenceResult r = maximum_independent_set(g);
        EXPECT_TRUE(r.exact);
        EXPECT_EQ(r.witness.size(), n);
        const auto w = independence_witness(g, n);
        ASSERT_TRUE(w);
        EXPECT_TRUE(is_independent(g, set_of(2 * n + 1, *w)));
        EXPECT_FALSE(independence_witness(g, n + 1));
    }
}

TEST(RankReport, Fano) {
    const RankReport r = rank_report(fano());
    EXPECT_EQ(r.rk_gen.value(), 3u);
    EXPECT_TRUE(r.rk_gen.exact);
    EXPECT_EQ(r.rk_wo.value(), 3u);
    EXPECT_EQ(r.rk_ind_lower, 3u);
    EXPECT_EQ(r.ep.status, EPStatus::holds);
    for (auto s : r.basis_sizes) EXPECT_EQ(s, 3u);
}

TEST(RankReport, Example2RanksDisagree) {
    const RankReport r = rank_report(example2(4));
    EXPECT_EQ(r.rk_gen.value(), 3u);
    EXPECT_EQ(r.rk_wo.value(), 5u);
    EXPECT_EQ(r.rk_ind_lower, 4u);
    EXPECT_TRUE(r.rk_ind_exact);
    EXPECT_EQ(r.ep.status, EPStatus::fails);
    EXPECT_FALSE(r.basis_sizes.empty());
}

TEST(RankReport, SinglePoint) {
    const RankReport r = rank_report(discrete_geometry(1));
    EXPECT_EQ(r.rk_gen.value(), 1u);
    EXPECT_EQ(r.rk_wo.value(), 1u);
    EXPECT_EQ(r.rk_ind_lower, 1u);
}
