// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.
#include "cli_app.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

using namespace cpers;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome ac1_h4_depth_zero_flip() {
    Outcome o;
    std::ostringstream out, err;
    const auto t0 = Clock::now();
    const int code = cli::run({"verify-paper", "--q", "4", "--format", "json"}, out, err);
    o.require(code == 0, "verify-paper exited with " + std::to_string(code) + ": " + err.str());
    if (!o.pass)
        return o;
    const auto v = nlohmann::json::parse(out.str())["verification"];
    o.require(v["colon_s3"]["member"] == true, "colon route: m not in Ass(R/J^3)");
    o.require(v["colon_s4"]["member"] == false, "colon route: m in Ass(R/J^4)");
    o.require(v["pruned_s3"]["member"] == true, "pruned search: m not in Ass(R/J^3)");
    o.require(v["pruned_s4"]["member"] == false, "pruned search: m in Ass(R/J^4)");
    o.require(v["routes_agree"] == true, "routes disagree");
    o.require(v["verdict"] == "persistence violated at s=3; non-increasing depth fails", "unexpected verdict");
    o.require(seconds_since(t0) <= 600, "slower than 10 minutes");
    // Independent re-check of the s = 3 witness by factoring into covers.
    const PowerMembership j3(cover_ideal(build_hpq(3, 4)), 3, MembershipStrategy::factor_search);
    o.require(is_max_ideal_witness(j3, Monomial(std::vector<Exponent>(12, 2))), "(prod x)^2 is not a witness");
    return o;
}

Outcome ac2_h5_depth_zero_flip() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto v = verify_hq(5);
    o.require(v.pruned_s3.member, "m not in Ass(R/J^3)");
    o.require(!v.pruned_s4.member, "m in Ass(R/J^4)");
    o.require(v.persistence_fails(), "persistence does not fail");
    PrunedSearchOptions factor;
    factor.membership = MembershipStrategy::factor_search;
    o.require(!pruned_witness_search(3, 5, 4, factor).member, "factor-search membership disagrees at s=4");
    o.require(seconds_since(t0) <= 1800, "slower than 30 minutes");
    return o;
}

Outcome ac3_cube_decomposition() {
    Outcome o;
    for (std::size_t q = 4; q <= 10; ++q) {
        const auto t0 = Clock::now();
        const auto g = build_hpq(3, q);
        const auto d = cube_decomposition(q);
        o.require(verify_cube_decomposition(g, d), "decomposition fails at q=" + std::to_string(q));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t v = 0; v < 3 * q; ++v) {
                auto bad = d;
                bad.covers[i] = bad.covers[i].with(v, bad.covers[i][v] == 0 ? 1 : 0);
                o.require(!verify_cube_decomposition(g, bad), "mutation accepted at q=" + std::to_string(q) + " M" +
                                                                  std::to_string(i + 1) + " vertex " + g.label(v));
            }
        o.require(seconds_since(t0) <= 1.0, "slower than 1 second at q=" + std::to_string(q));
    }
    return o;
}

Outcome ac4_critical() {
    Outcome o;
    for (std::size_t q : {4u, 5u, 6u}) {
        const auto t0 = Clock::now();
        const auto g = build_hpq(3, q);
        const auto r = is_critically_chromatic(g, 4);
        o.require(r.chromatic_number == 4, "chi(H_" + std::to_string(q) + ") != 4");
        o.require(r.critical, "H_" + std::to_string(q) + " not critical");
        o.require(oracle::chromatic(g.vertex_count(), support::edges_of(g)) == 4,
                  "backtracking oracle disagrees at q=" + std::to_string(q));
        o.require(seconds_since(t0) <= 60, "slower than 1 minute at q=" + std::to_string(q));
    }
    return o;
}

Outcome ac5_hpq_colorings() {
    Outcome o;
    const auto t0 = Clock::now();
    for (std::size_t p = 4; p <= 7; ++p)
        for (std::size_t q = 4; q <= 9; ++q) {
            const std::string tag = "H_{" + std::to_string(p) + "," + std::to_string(q) + "}";
            const auto g = build_hpq(p, q);
            const auto c = explicit_coloring_hpq(p, q);
            o.require(is_proper(g, c), tag + " coloring not proper");
            o.require(distinct_colors(c) == p, tag + " coloring does not use exactly p colors");
            o.require(chromatic_number(g).chromatic_number == p, tag + " chi != p");
            const auto r = is_critically_chromatic(g, p);
            o.require(!r.critical && !r.surviving.empty(), tag + " reported critical");
            if (!r.surviving.empty())
                o.require(find_coloring(delete_vertex(g, r.surviving.front()), p - 1) == std::nullopt,
                          tag + " named vertex " + g.label(r.surviving.front()) + " does not survive");
        }
    o.require(seconds_since(t0) <= 300, "slower than 5 minutes");
    return o;
}

Outcome ac6_persistence() {
    Outcome o;
    o.require(persistence_check(cover_ideal(complete_graph(3)), 4).persists(), "violation for J(K3)");
    o.require(persistence_check(cover_ideal(cycle_graph(4)), 4).persists(), "violation for J(C4)");
    return o;
}

Outcome ac7_oracle_properties(std::size_t &count) {
    Outcome o;
    std::mt19937 rng(20261018);
    count = 0;
    while (count < 200) {
        std::uniform_int_distribution<std::size_t> arity(1, 5);
        const std::size_t n = arity(rng);
        const auto gens = oracle::random_gens(rng, n, 5, 3);
        const auto i = support::ideal_of(n, gens);
        if (i.is_unit())
            continue;
        ++count;
        const std::string tag = "ideal #" + std::to_string(count);
        const oracle::Exps box(n, 4);

        // colon / membership duality
        const auto f = oracle::random_gens(rng, n, 1, 2).front();
        const auto c = colon(i, support::mono(f));
        bool dual = true;
        oracle::for_box(box, [&](const oracle::Exps &m) {
            dual = dual && c.contains(support::mono(m)) == oracle::member(gens, oracle::mul(m, f));
        });
        o.require(dual, tag + ": colon/membership duality");

        // intersection vs brute-force membership
        const auto other = oracle::random_gens(rng, n, 3, 3);
        const auto expected = oracle::minimal_in_box(oracle::Exps(n, 3), [&](const oracle::Exps &m) {
            return oracle::member(gens, m) && oracle::member(other, m);
        });
        o.require(support::gens_of(intersect(i, support::ideal_of(n, other))) == expected, tag + ": intersection");

        // power additivity
        o.require(power(i, 3) == product(power(i, 1), power(i, 2)), tag + ": I^3 != I*I^2");
        o.require(support::gens_of(power(i, 2)) == oracle::power_products(gens, 2, n), tag + ": I^2 vs products");

        // localization commutes with powers
        std::vector<std::size_t> vars;
        for (std::size_t k = 0; k < n; ++k)
            if (rng() % 2)
                vars.push_back(k);
        if (vars.empty())
            vars.push_back(0);
        const PrimeSupport w(n, vars);
        for (unsigned s = 1; s <= 3; ++s)
            o.require(localize(power(i, s), w) == power(localize(i, w), s), tag + ": localization vs power");

        // three-way Ass membership
        if (!i.is_zero())
            for (const auto &p : enumerate_supports(n, {})) {
                const bool colon_route = prime_in_ass(i, p).member;
                const bool full = prime_in_ass(i, p, ColonStrategy::full).member;
                const bool search = bounded_witness_search(i, p).member;
                const bool brute = oracle::prime_associated(gens, support::keep_of(n, p.variables()));
                o.require(colon_route == full && full == search && search == brute, tag + ": Ass disagreement");
            }
    }
    return o;
}

Outcome ac8_cover_duality(std::size_t &count) {
    Outcome o;
    std::vector<std::pair<std::size_t, oracle::Edges>> corpus;
    corpus.emplace_back(12, oracle::hpq_edges(3, 4));
    corpus.emplace_back(15, oracle::hpq_edges(3, 5));
    corpus.emplace_back(16, oracle::hpq_edges(4, 4));
    std::mt19937 rng(8);
    for (std::size_t n = 2; corpus.size() < 60; n = n % 16 + 2)
        corpus.emplace_back(n, oracle::random_edges(rng, n, 0.15 + 0.05 * double(corpus.size() % 10)));
    count = corpus.size();
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        const auto &[n, edges] = corpus[c];
        const auto g = support::graph_of(n, edges);
        const auto a = cover_ideal(g, CoverIdealMethod::edge_intersection);
        const auto b = cover_ideal(g, CoverIdealMethod::cover_enumeration);
        o.require(a == b, "constructions differ on graph #" + std::to_string(c));
        if (!edges.empty())
            o.require(support::gens_of(a) == oracle::cover_ideal(n, edges),
                      "subset enumeration differs on graph #" + std::to_string(c));
    }
    return o;
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const std::string &name, const std::function<Outcome()> &check) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] AC%d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), seconds_since(t0),
                    o.pass ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    };

    std::size_t ideals = 0, graphs = 0;
    report(1, "H_4: m in Ass(R/J^3), m not in Ass(R/J^4), colon route and pruned search agree", ac1_h4_depth_zero_flip);
    report(2, "H_5: m in Ass(R/J^3), m not in Ass(R/J^4) by pruned search", ac2_h5_depth_zero_flip);
    report(3, "(prod x)^3 decomposition holds for q=4..10 and rejects every single-vertex mutation",
           ac3_cube_decomposition);
    report(4, "H_q critically 4-chromatic with chi = 4 for q=4,5,6", ac4_critical);
    report(5, "H_{p,q} explicit p-colorings proper, chi = p, not critical for p=4..7, q=4..9", ac5_hpq_colorings);
    report(6, "no persistence violation for J(K3) and J(C4) up to s=4", ac6_persistence);
    report(7, "oracle-equivalence properties on random monomial ideals", [&] { return ac7_oracle_properties(ideals); });
    std::printf("       (%zu random ideals checked)\n", ideals);
    report(8, "cover ideal by edge intersection equals cover ideal by cover enumeration",
           [&] { return ac8_cover_duality(graphs); });
    std::printf("       (%zu graphs checked)\n", graphs);

    std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
