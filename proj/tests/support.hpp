#ifndef CPERS_TESTS_SUPPORT_HPP
#define CPERS_TESTS_SUPPORT_HPP

#include "oracles.hpp"

#include <cpers/cpers.hpp>

namespace support {

inline oracle::Gens gens_of(const cpers::MonomialIdeal &ideal) {
    oracle::Gens out;
    for (const auto &g : ideal.generators())
        out.emplace_back(g.exponents().begin(), g.exponents().end());
    std::sort(out.begin(), out.end());
    return out;
}

inline cpers::MonomialIdeal ideal_of(std::size_t n, const oracle::Gens &gens) {
    std::vector<cpers::Monomial> ms;
    for (const auto &g : gens)
        ms.emplace_back(std::vector<cpers::Exponent>(g.begin(), g.end()));
    return cpers::MonomialIdeal::generated_by(n, std::move(ms));
}

inline cpers::Monomial mono(const oracle::Exps &e) {
    return cpers::Monomial(std::vector<cpers::Exponent>(e.begin(), e.end()));
}

inline cpers::Graph graph_of(std::size_t n, const oracle::Edges &edges) {
    cpers::Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

inline oracle::Edges edges_of(const cpers::Graph &g) {
    oracle::Edges out;
    for (auto [u, v] : g.edges())
        out.emplace_back(u, v);
    return out;
}

inline std::vector<bool> keep_of(std::size_t n, const std::vector<std::size_t> &vars) {
    std::vector<bool> keep(n, false);
    for (auto k : vars)
        keep[k] = true;
    return keep;
}

/// (x0x1, x0x2, x1x2), the cover ideal of the triangle.
inline cpers::MonomialIdeal jk3() {
    return cpers::MonomialIdeal::generated_by(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

} // namespace support

#endif
