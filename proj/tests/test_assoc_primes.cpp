#include "support.hpp"

#include <gtest/gtest.h>

using namespace cpers;

namespace {

Monomial all_ones_pow(std::size_t n, Exponent e) { return Monomial(std::vector<Exponent>(n, e)); }

bool brute_ass(const MonomialIdeal &i, const PrimeSupport &w) {
    return oracle::prime_associated(support::gens_of(i), support::keep_of(i.arity(), w.variables()));
}

} // namespace

TEST(CertifyWitness, RejectsBadWitnesses) {
    const auto j2 = power(support::jk3(), 2);
    const auto m = PrimeSupport::maximal(3);
    EXPECT_NO_THROW(certify_witness(j2, m, Monomial{1, 1, 1}));
    EXPECT_THROW(certify_witness(j2, m, Monomial{2, 2, 0}), CertificateError);
    EXPECT_THROW(certify_witness(j2, m, Monomial{1, 1, 0}), CertificateError);
}

TEST(MaxIdealInAss, Examples) {
    const auto j = support::jk3();
    const auto r2 = max_ideal_in_ass(power(j, 2));
    EXPECT_TRUE(r2.member);
    ASSERT_TRUE(r2.witness.has_value());
    EXPECT_EQ(*r2.witness, (Monomial{1, 1, 1}));
    EXPECT_EQ(r2.excess_generators, 1u);

    EXPECT_FALSE(max_ideal_in_ass(j).member);
    EXPECT_FALSE(max_ideal_in_ass(j).witness.has_value());

    const auto xy = MonomialIdeal::generated_by(2, {{2, 0}, {1, 1}, {0, 2}});
    const auto r = max_ideal_in_ass(xy);
    EXPECT_TRUE(r.member);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(*r.witness == (Monomial{1, 0}) || *r.witness == (Monomial{0, 1}));
    EXPECT_NO_THROW(certify_witness(xy, PrimeSupport::maximal(2), *r.witness));

    EXPECT_THROW(max_ideal_in_ass(MonomialIdeal::zero(2)), InvalidArgument);
    EXPECT_THROW(max_ideal_in_ass(MonomialIdeal::unit(2)), InvalidArgument);
}

TEST(MaxIdealInAss, DefinedByStrictColonContainment) {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const auto i = support::ideal_of(3, oracle::random_gens(rng, 3, 5, 3));
        if (i.is_unit())
            continue;
        const bool strict = colon(i, MonomialIdeal::maximal(3)).strictly_contains(i);
        EXPECT_EQ(max_ideal_in_ass(i).member, strict);
        EXPECT_EQ(max_ideal_in_ass(i, ColonStrategy::full).member, strict);
    }
}

TEST(PrimeInAss, Examples) {
    const auto j = support::jk3();
    for (unsigned s = 1; s <= 3; ++s)
        for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}})
            EXPECT_TRUE(prime_in_ass(power(j, s), PrimeSupport(3, {a, b})).member) << "s=" << s;
    for (std::size_t v = 0; v < 3; ++v)
        EXPECT_FALSE(prime_in_ass(j, PrimeSupport(3, {v})).member);
    EXPECT_THROW(prime_in_ass(j, PrimeSupport(4, {0})), ArityMismatch);
}

TEST(AssScan, Examples) {
    const auto j = support::jk3();
    const std::vector<PrimeSupport> edges{PrimeSupport(3, {0, 1}), PrimeSupport(3, {0, 2}), PrimeSupport(3, {1, 2})};
    EXPECT_EQ(associated_primes(j), edges);
    auto with_m = edges;
    with_m.push_back(PrimeSupport::maximal(3));
    EXPECT_EQ(associated_primes(power(j, 2)), with_m);

    const auto edge = cover_ideal(complete_graph(2));
    for (unsigned s = 1; s <= 4; ++s)
        EXPECT_EQ(associated_primes(power(edge, s)), std::vector<PrimeSupport>{PrimeSupport::maximal(2)});
}

TEST(AssScan, GuardRefusesInsteadOfTruncating) {
    EXPECT_THROW(enumerate_supports(30, {0, 1000}), BudgetExceeded);
    EXPECT_EQ(enumerate_supports(30, {1, 1000}).size(), 30u);
    EXPECT_EQ(enumerate_supports(4, {}).size(), 15u);
    const auto all = enumerate_supports(5, {});
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(AssScan, ThreeWayAgreementOnRandomIdeals) {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto i = support::ideal_of(n, oracle::random_gens(rng, n, 4, 3));
        if (i.is_unit() || i.is_zero())
            continue;
        for (const auto &w : enumerate_supports(n, {})) {
            const bool pruned = prime_in_ass(i, w).member;
            EXPECT_EQ(prime_in_ass(i, w, ColonStrategy::full).member, pruned);
            EXPECT_EQ(bounded_witness_search(i, w).member, pruned);
            EXPECT_EQ(brute_ass(i, w), pruned);
        }
    }
}

TEST(Persistence, CliquesAndPerfectGraphsPersist) {
    EXPECT_TRUE(persistence_check(cover_ideal(cycle_graph(4)), 3).persists());
    const auto k3 = persistence_check(support::jk3(), 4);
    EXPECT_TRUE(k3.persists());
    ASSERT_EQ(k3.powers.size(), 4u);
    EXPECT_THROW(persistence_check(support::jk3(), 1), InvalidArgument);
}

TEST(Persistence, H4FailsAtThree) {
    const auto j = cover_ideal(build_hpq(3, 4));
    const auto r = persistence_check(j, 4, std::vector<PrimeSupport>{PrimeSupport::maximal(12)});
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations.front().power, 3u);
    EXPECT_TRUE(r.violations.front().prime.is_maximal());
}

TEST(PowerMembership, StrategiesAgree) {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const auto base = support::ideal_of(4, oracle::random_gens(rng, 4, 4, 2));
        const unsigned s = 1 + trial % 3;
        const PowerMembership a(base, s, MembershipStrategy::expanded_power);
        const PowerMembership b(base, s, MembershipStrategy::factor_search);
        ASSERT_TRUE(a.expanded().has_value());
        EXPECT_FALSE(b.expanded().has_value());
        for (int probe = 0; probe < 40; ++probe) {
            const auto t = support::mono(oracle::random_gens(rng, 4, 1, 5).front());
            EXPECT_EQ(a.contains(t), b.contains(t));
        }
    }
}

TEST(CliquePatterns, Counts) {
    EXPECT_EQ(clique_patterns(3, 4).size(), 4u);
    EXPECT_EQ(clique_patterns(3, 3), (std::vector<std::vector<Exponent>>{{2, 2, 2}}));
    for (const auto &pat : clique_patterns(4, 3)) {
        Exponent sum = 0;
        for (auto e : pat) {
            EXPECT_LE(e, 2u);
            sum += e;
        }
        EXPECT_GE(sum, 9u);
    }
}

TEST(PrunedSearch, H4) {
    const auto s4 = pruned_witness_search(3, 4, 4);
    EXPECT_FALSE(s4.member);
    EXPECT_LE(s4.candidates_examined, 255u);
    EXPECT_EQ(s4.method, AssMethod::pruned_search);

    const auto s3 = pruned_witness_search(3, 4, 3);
    EXPECT_TRUE(s3.member);
    ASSERT_TRUE(s3.witness.has_value());
    EXPECT_EQ(*s3.witness, all_ones_pow(12, 2));
    EXPECT_NO_THROW(certify_witness(power(cover_ideal(build_hpq(3, 4)), 3), PrimeSupport::maximal(12), *s3.witness));
}

TEST(PrunedSearch, H5) {
    EXPECT_FALSE(pruned_witness_search(3, 5, 4).member);
    EXPECT_TRUE(pruned_witness_search(3, 5, 3).member);
}

TEST(PrunedSearch, AgreesWithColonRouteOnSmallCases) {
    // s = 2 is quick on both routes.
    const auto j = cover_ideal(build_hpq(3, 4));
    EXPECT_EQ(pruned_witness_search(3, 4, 2).member, max_ideal_in_ass(power(j, 2)).member);
}

TEST(PrunedSearch, DeterministicAcrossThreadsAndMembership) {
    PrunedSearchOptions one, many, factor;
    one.threads = 1;
    many.threads = 4;
    factor.membership = MembershipStrategy::factor_search;
    for (unsigned s : {2u, 3u, 4u}) {
        const auto a = pruned_witness_search(3, 4, s, one);
        const auto b = pruned_witness_search(3, 4, s, many);
        const auto c = pruned_witness_search(3, 4, s, factor);
        EXPECT_EQ(a.member, b.member);
        EXPECT_EQ(a.witness, b.witness);
        EXPECT_EQ(a.candidates_examined, b.candidates_examined);
        EXPECT_EQ(a.member, c.member);
        EXPECT_EQ(a.witness, c.witness);
    }
}

TEST(PrunedSearch, CapAndArguments) {
    PrunedSearchOptions tiny;
    tiny.candidate_cap = 10;
    EXPECT_THROW(pruned_witness_search(3, 4, 4, tiny), BudgetExceeded);
    EXPECT_THROW(pruned_witness_search(2, 4, 4), InvalidArgument);
    EXPECT_THROW(pruned_witness_search(3, 3, 4), InvalidArgument);
    EXPECT_THROW(pruned_witness_search(3, 4, 1), InvalidArgument);
}

TEST(CubeDecomposition, HoldsForBothParities) {
    for (std::size_t q = 4; q <= 10; ++q)
        EXPECT_TRUE(verify_obs_power3(q)) << "q=" << q;
    EXPECT_THROW(cube_decomposition(3), InvalidArgument);
}

TEST(CubeDecomposition, EverySingleVertexMutationFails) {
    for (std::size_t q : {4u, 5u}) {
        const auto g = build_hpq(3, q);
        const auto d = cube_decomposition(q);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t v = 0; v < 3 * q; ++v) {
                auto bad = d;
                bad.covers[i] = bad.covers[i].with(v, bad.covers[i][v] == 0 ? 1 : 0);
                EXPECT_FALSE(verify_cube_decomposition(g, bad)) << "q=" << q << " M" << i + 1 << " v=" << v;
            }
    }
}

TEST(CubeDecomposition, ImpliesMembershipInJ4) {
    const PowerMembership j4(cover_ideal(build_hpq(3, 4)), 4, MembershipStrategy::factor_search);
    EXPECT_TRUE(j4.contains(all_ones_pow(12, 3)));
}
