#ifndef CPERS_VERTEX_COVERS_HPP
#define CPERS_VERTEX_COVERS_HPP

#include "graph.hpp"

#include <algorithm>
#include <compare>
#include <vector>

namespace cpers {

/// A set of vertices meeting every edge, as sorted vertex indices.
struct VertexCover {
    std::vector<std::size_t> vertices;

    VertexSet as_set(std::size_t n) const {
        VertexSet s(n);
        for (auto v : vertices)
            s.set(v);
        return s;
    }

    friend bool operator==(const VertexCover &, const VertexCover &) = default;
    friend auto operator<=>(const VertexCover &, const VertexCover &) = default;
};

namespace detail {

// Bron-Kerbosch with Tomita pivoting, run on the complement graph so that
// the cliques it reports are the maximal independent sets of g.
inline void enumerate_mis(const std::vector<VertexSet> &co_adj, VertexSet &r, VertexSet p, VertexSet x,
                          std::vector<VertexSet> &out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    std::size_t pivot = VertexSet::npos;
    std::size_t best = 0;
    const VertexSet px = p | x;
    for (auto u = px.next(0); u != VertexSet::npos; u = px.next(u + 1)) {
        const std::size_t c = p.intersection_count(co_adj[u]);
        if (pivot == VertexSet::npos || c > best) {
            pivot = u;
            best = c;
        }
    }
    const VertexSet branch = p - co_adj[pivot];
    for (auto v = branch.next(0); v != VertexSet::npos; v = branch.next(v + 1)) {
        r.set(v);
        enumerate_mis(co_adj, r, p & co_adj[v], x & co_adj[v], out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    }
}

} // namespace detail

/// All maximal independent sets of g, each as a VertexSet, in unspecified order.
inline std::vector<VertexSet> maximal_independent_sets(const Graph &g) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexSet> co_adj;
    co_adj.reserve(n);
    const VertexSet all = VertexSet::full(n);
    for (std::size_t v = 0; v < n; ++v) {
        VertexSet c = all - g.neighbors(v);
        c.reset(v);
        co_adj.push_back(std::move(c));
    }
    std::vector<VertexSet> out;
    VertexSet r(n);
    detail::enumerate_mis(co_adj, r, all, VertexSet(n), out);
    return out;
}

/// Every inclusion-minimal vertex cover of g, obtained as complements of
/// maximal independent sets and sorted lexicographically by vertex list.
inline std::vector<VertexCover> minimal_vertex_covers(const Graph &g) {
    const std::size_t n = g.vertex_count();
    const VertexSet all = VertexSet::full(n);
    std::vector<VertexCover> covers;
    for (const auto &mis : maximal_independent_sets(g))
        covers.push_back({(all - mis).members()});
    std::sort(covers.begin(), covers.end());
    return covers;
}

/// A vertex cover from which no single vertex can be dropped.
inline bool is_minimal_vertex_cover(const Graph &g, const VertexSet &cover) {
    if (!g.is_vertex_cover(cover))
        return false;
    for (auto v = cover.next(0); v != VertexSet::npos; v = cover.next(v + 1)) {
        // v is redundant iff all of its neighbors are already in the cover.
        if ((g.neighbors(v) - cover).empty())
            return false;
    }
    return true;
}

} // namespace cpers

#endif
