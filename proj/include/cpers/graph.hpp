#ifndef CPERS_GRAPH_HPP
#define CPERS_GRAPH_HPP

#include "error.hpp"
#include "vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cpers {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1 with optional labels.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, VertexSet(n)), labels_(n) {}

    std::size_t vertex_count() const noexcept { return adj_.size(); }

    /// Adds {u, v}. Adding an existing edge is a no-op; loops are rejected.
    void add_edge(std::size_t u, std::size_t v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw InvalidArgument("loop at vertex " + std::to_string(u) + " is not allowed in a simple graph");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool adjacent(std::size_t u, std::size_t v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u].test(v);
    }

    const VertexSet &neighbors(std::size_t v) const {
        check_vertex(v);
        return adj_[v];
    }

    std::size_t degree(std::size_t v) const { return neighbors(v).count(); }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (const auto &row : adj_)
            twice += row.count();
        return twice / 2;
    }

    /// Edges {u, v} with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t u = 0; u < adj_.size(); ++u)
            for (auto v = adj_[u].next(u + 1); v != VertexSet::npos; v = adj_[u].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    void set_label(std::size_t v, std::string label) {
        check_vertex(v);
        labels_[v] = std::move(label);
    }

    bool has_label(std::size_t v) const { return labels_.at(v).has_value(); }

    /// The vertex's label, or "v<index>" when unlabeled.
    std::string label(std::size_t v) const {
        check_vertex(v);
        return labels_[v] ? *labels_[v] : "v" + std::to_string(v);
    }

    std::optional<std::size_t> find_label(const std::string &label) const {
        for (std::size_t v = 0; v < labels_.size(); ++v)
            if (labels_[v] && *labels_[v] == label)
                return v;
        return std::nullopt;
    }

    bool is_vertex_cover(const VertexSet &cover) const {
        for (std::size_t u = 0; u < adj_.size(); ++u)
            if (!cover.test(u) && !(adj_[u] - cover).empty())
                return false;
        return true;
    }

    bool is_independent(const VertexSet &set) const {
        for (auto u = set.next(0); u != VertexSet::npos; u = set.next(u + 1))
            if (adj_[u].intersects(set))
                return false;
        return true;
    }

    void check_vertex(std::size_t v) const {
        if (v >= adj_.size())
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range (graph has " +
                                  std::to_string(adj_.size()) + " vertices)");
    }

    friend bool operator==(const Graph &a, const Graph &b) { return a.adj_ == b.adj_; }

private:
    std::vector<VertexSet> adj_;
    std::vector<std::optional<std::string>> labels_;
};

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3)
        throw InvalidArgument("a cycle needs at least 3 vertices");
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

/// Position of vertex x_{i,j} of H_{p,q}: column i in 1..q, row j in 0..p-1.
struct GridLabel {
    std::size_t i;
    std::size_t j;

    /// Flat vertex index (i-1)*p + j.
    std::size_t index(std::size_t p) const noexcept { return (i - 1) * p + j; }

    static GridLabel of(std::size_t p, std::size_t v) noexcept { return {v / p + 1, v % p}; }

    std::string name() const { return "x" + std::to_string(i) + "_" + std::to_string(j); }

    friend bool operator==(const GridLabel &, const GridLabel &) = default;
};

/// H_{p,q}: q columns each inducing K_p, row paths x_{i,j} -- x_{i+1,j},
/// and the twisted closing edges x_{1,j} -- x_{q,p-1-j}.
inline Graph build_hpq(std::size_t p, std::size_t q) {
    if (p < 3)
        throw InvalidArgument("H_{p,q} needs p >= 3 (got p = " + std::to_string(p) + ")");
    if (q < 4)
        throw InvalidArgument("H_{p,q} needs q >= 4 (got q = " + std::to_string(q) + ")");
    Graph g(p * q);
    auto at = [p](std::size_t i, std::size_t j) { return GridLabel{i, j}.index(p); };
    for (std::size_t i = 1; i <= q; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            g.set_label(at(i, j), GridLabel{i, j}.name());
            for (std::size_t k = j + 1; k < p; ++k)
                g.add_edge(at(i, j), at(i, k));
            if (i < q)
                g.add_edge(at(i, j), at(i + 1, j));
        }
    }
    for (std::size_t j = 0; j < p; ++j)
        g.add_edge(at(1, j), at(q, p - 1 - j));
    return g;
}

/// Adds a twin of v: a new vertex adjacent to v and to every neighbor of v.
inline Graph expand(const Graph &g, std::size_t v) {
    g.check_vertex(v);
    const std::size_t n = g.vertex_count();
    Graph out(n + 1);
    for (const auto &[a, b] : g.edges())
        out.add_edge(a, b);
    for (std::size_t u = 0; u < n; ++u)
        if (g.has_label(u))
            out.set_label(u, g.label(u));
    out.add_edge(v, n);
    const auto &nb = g.neighbors(v);
    for (auto z = nb.next(0); z != VertexSet::npos; z = nb.next(z + 1))
        out.add_edge(n, z);
    out.set_label(n, g.label(v) + "'");
    return out;
}

/// G[W]: expand successively at each vertex of W (original indices),
/// processed in ascending order.
inline Graph expand_at(const Graph &g, std::vector<std::size_t> w) {
    for (auto v : w)
        g.check_vertex(v);
    std::sort(w.begin(), w.end());
    Graph out = g;
    for (auto v : w)
        out = expand(out, v);
    return out;
}

/// Induced subgraph on the complement of `removed`, indices compacted in
/// increasing order, labels preserved.
inline Graph delete_vertices(const Graph &g, const VertexSet &removed) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> new_index(n, VertexSet::npos);
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (!removed.test(v))
            new_index[v] = next++;
    Graph out(next);
    for (std::size_t v = 0; v < n; ++v)
        if (new_index[v] != VertexSet::npos && g.has_label(v))
            out.set_label(new_index[v], g.label(v));
    for (const auto &[a, b] : g.edges())
        if (new_index[a] != VertexSet::npos && new_index[b] != VertexSet::npos)
            out.add_edge(new_index[a], new_index[b]);
    return out;
}

inline Graph delete_vertex(const Graph &g, std::size_t v) {
    g.check_vertex(v);
    VertexSet removed(g.vertex_count());
    removed.set(v);
    return delete_vertices(g, removed);
}

} // namespace cpers

#endif
