#include "support.hpp"

#include <gtest/gtest.h>

using namespace cpers;
using support::gens_of;

TEST(CoverIdeal, Examples) {
    EXPECT_EQ(cover_ideal(complete_graph(3)), support::jk3());
    EXPECT_EQ(gens_of(cover_ideal(complete_graph(2))), (oracle::Gens{{0, 1}, {1, 0}}));
    EXPECT_TRUE(cover_ideal(Graph(3)).is_unit());
    const auto j = cover_ideal(build_hpq(3, 4));
    EXPECT_EQ(j.size(), 16u);
    for (const auto &g : j.generators()) {
        EXPECT_TRUE(g.is_squarefree());
        for (std::size_t i = 0; i < 4; ++i)
            EXPECT_GE(g[3 * i] + g[3 * i + 1] + g[3 * i + 2], 2u);
    }
}

TEST(CoverIdeal, ConstructionsAgreeWithOracle) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + trial % 8;
        const auto edges = oracle::random_edges(rng, n, 0.35);
        const auto g = support::graph_of(n, edges);
        const auto by_edges = cover_ideal(g, CoverIdealMethod::edge_intersection);
        const auto by_covers = cover_ideal(g, CoverIdealMethod::cover_enumeration);
        EXPECT_EQ(by_edges, by_covers);
        if (!edges.empty()) {
            EXPECT_EQ(gens_of(by_edges), oracle::cover_ideal(n, edges));
        }
    }
}

TEST(PrimeSupport, Validation) {
    EXPECT_THROW(PrimeSupport(3, {}), InvalidArgument);
    EXPECT_THROW(PrimeSupport(3, {3}), InvalidArgument);
    const PrimeSupport w(4, {2, 0, 2});
    EXPECT_EQ(w.variables(), (std::vector<std::size_t>{0, 2}));
    EXPECT_FALSE(w.is_maximal());
    EXPECT_TRUE(PrimeSupport::maximal(4).is_maximal());
    EXPECT_EQ(gens_of(w.ideal()), (oracle::Gens{{0, 0, 1, 0}, {1, 0, 0, 0}}));
    EXPECT_LT(PrimeSupport(4, {3}), PrimeSupport(4, {0, 1}));
}

TEST(Localize, Examples) {
    const auto j = support::jk3();
    EXPECT_EQ(localize(j, PrimeSupport(3, {0, 1})), (MonomialIdeal::generated_by(3, {{1, 0, 0}, {0, 1, 0}})));
    EXPECT_EQ(localize(j, PrimeSupport::maximal(3)), j);
    EXPECT_TRUE(localize(j, PrimeSupport(3, {0})).is_unit());
    EXPECT_TRUE(localize(MonomialIdeal::zero(3), PrimeSupport(3, {0})).is_zero());
}

TEST(Localize, CommutesWithPowers) {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4;
        const auto gens = oracle::random_gens(rng, n, 4, 2);
        const auto i = support::ideal_of(n, gens);
        const PrimeSupport w(n, {std::size_t(trial % 4), std::size_t((trial / 4) % 4)});
        const auto keep = support::keep_of(n, w.variables());
        EXPECT_EQ(gens_of(localize(i, w)), oracle::localize(gens, keep));
        for (unsigned s = 1; s <= 3; ++s)
            EXPECT_EQ(localize(power(i, s), w), power(localize(i, w), s));
    }
}
