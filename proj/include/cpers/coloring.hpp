#ifndef CPERS_COLORING_HPP
#define CPERS_COLORING_HPP

#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cpers {

/// Vertex v gets colors[v] in 0..num_colors-1.
struct Coloring {
    std::vector<std::size_t> colors;
    std::size_t num_colors = 0;

    friend bool operator==(const Coloring &, const Coloring &) = default;
};

/// Every edge joins two different colors, all colors are in range, and
/// every vertex is colored.
inline bool is_proper(const Graph &g, const Coloring &c) {
    if (c.colors.size() != g.vertex_count())
        return false;
    for (auto col : c.colors)
        if (col >= c.num_colors)
            return false;
    for (const auto &[u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            return false;
    return true;
}

inline std::size_t distinct_colors(const Coloring &c) {
    std::vector<bool> used(c.num_colors, false);
    std::size_t k = 0;
    for (auto col : c.colors)
        if (col < used.size() && !used[col]) {
            used[col] = true;
            ++k;
        }
    return k;
}

/// A clique grown greedily from each start vertex; the largest one found.
inline std::vector<std::size_t> greedy_clique(const Graph &g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> best;
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<std::size_t> clique{start};
        VertexSet cand = g.neighbors(start);
        while (!cand.empty()) {
            std::size_t pick = VertexSet::npos;
            std::size_t pick_deg = 0;
            for (auto v = cand.next(0); v != VertexSet::npos; v = cand.next(v + 1)) {
                const std::size_t d = cand.intersection_count(g.neighbors(v));
                if (pick == VertexSet::npos || d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            clique.push_back(pick);
            cand &= g.neighbors(pick);
        }
        if (clique.size() > best.size())
            best = clique;
    }
    std::sort(best.begin(), best.end());
    return best;
}

namespace detail {

/// DSATUR state: per-vertex counts of neighbors holding each color.
class Dsatur {
public:
    Dsatur(const Graph &g, std::size_t k)
        : g_(g), k_(k), color_(g.vertex_count(), none), seen_(g.vertex_count(), std::vector<std::uint32_t>(k, 0)),
          sat_(g.vertex_count(), 0) {}

    /// Exact k-colorability by backtracking; new colors are opened one at a
    /// time, which removes color-permutation symmetry.
    std::optional<Coloring> solve() {
        if (search(0, 0))
            return Coloring{std::vector<std::size_t>(color_.begin(), color_.end()), k_};
        return std::nullopt;
    }

    /// One greedy DSATUR pass with unbounded colors.
    static Coloring greedy(const Graph &g) {
        const std::size_t n = g.vertex_count();
        Dsatur d(g, n == 0 ? 1 : n);
        std::size_t used = 0;
        for (std::size_t step = 0; step < n; ++step) {
            const std::size_t v = d.pick();
            std::size_t c = 0;
            while (d.seen_[v][c] != 0)
                ++c;
            d.assign(v, c);
            used = std::max(used, c + 1);
        }
        return Coloring{std::vector<std::size_t>(d.color_.begin(), d.color_.end()), used};
    }

private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    std::size_t pick() const {
        std::size_t best = none;
        std::size_t best_sat = 0;
        std::size_t best_deg = 0;
        for (std::size_t v = 0; v < color_.size(); ++v) {
            if (color_[v] != none)
                continue;
            const std::size_t deg = uncolored_degree(v);
            if (best == none || sat_[v] > best_sat || (sat_[v] == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat_[v];
                best_deg = deg;
            }
        }
        return best;
    }

    std::size_t uncolored_degree(std::size_t v) const {
        std::size_t d = 0;
        const auto &nb = g_.neighbors(v);
        for (auto u = nb.next(0); u != VertexSet::npos; u = nb.next(u + 1))
            if (color_[u] == none)
                ++d;
        return d;
    }

    void assign(std::size_t v, std::size_t c) {
        color_[v] = c;
        const auto &nb = g_.neighbors(v);
        for (auto u = nb.next(0); u != VertexSet::npos; u = nb.next(u + 1))
            if (seen_[u][c]++ == 0)
                ++sat_[u];
    }

    void unassign(std::size_t v) {
        const std::size_t c = color_[v];
        color_[v] = none;
        const auto &nb = g_.neighbors(v);
        for (auto u = nb.next(0); u != VertexSet::npos; u = nb.next(u + 1))
            if (--seen_[u][c] == 0)
                --sat_[u];
    }

    bool search(std::size_t colored, std::size_t used) {
        if (colored == color_.size())
            return true;
        const std::size_t v = pick();
        if (sat_[v] >= k_)
            return false;
        const std::size_t limit = std::min(k_, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (seen_[v][c] != 0)
                continue;
            assign(v, c);
            if (search(colored + 1, std::max(used, c + 1)))
                return true;
            unassign(v);
        }
        return false;
    }

    const Graph &g_;
    std::size_t k_;
    std::vector<std::size_t> color_;
    std::vector<std::vector<std::uint32_t>> seen_;
    std::vector<std::size_t> sat_;
};

} // namespace detail

/// Greedy DSATUR coloring; an upper bound on the chromatic number.
inline Coloring dsatur_coloring(const Graph &g) { return detail::Dsatur::greedy(g); }

/// A proper coloring with at most k colors, if one exists.
inline std::optional<Coloring> find_coloring(const Graph &g, std::size_t k) {
    if (g.vertex_count() == 0)
        return Coloring{{}, k};
    if (k == 0 || greedy_clique(g).size() > k)
        return std::nullopt;
    return detail::Dsatur(g, k).solve();
}

struct ChromaticResult {
    std::size_t chromatic_number = 0;
    Coloring coloring;
    std::vector<std::size_t> clique;
    std::size_t greedy_upper = 0;
};

/// Exact chromatic number: start from a greedy clique lower bound and test
/// k-colorability upward until it succeeds or meets the DSATUR upper bound.
inline ChromaticResult chromatic_number(const Graph &g) {
    ChromaticResult r;
    if (g.vertex_count() == 0)
        return r;
    r.clique = greedy_clique(g);
    Coloring best = dsatur_coloring(g);
    r.greedy_upper = best.num_colors;
    for (std::size_t k = r.clique.size(); k < r.greedy_upper; ++k) {
        if (auto c = detail::Dsatur(g, k).solve()) {
            best = *c;
            break;
        }
    }
    best.num_colors = distinct_colors(best);
    r.chromatic_number = best.num_colors;
    r.coloring = std::move(best);
    if (!is_proper(g, r.coloring))
        throw CertificateError("chromatic number search produced an improper coloring");
    return r;
}

struct CriticalityReport {
    std::size_t chromatic_number = 0;
    bool critical = false;
    /// Vertices whose deletion leaves the chromatic number at s.
    std::vector<std::size_t> surviving;
};

/// Critically s-chromatic: chi(G) = s and chi(G - v) < s for every v.
inline CriticalityReport is_critically_chromatic(const Graph &g, std::size_t s) {
    if (s == 0)
        throw InvalidArgument("criticality needs s >= 1");
    CriticalityReport r;
    r.chromatic_number = chromatic_number(g).chromatic_number;
    if (r.chromatic_number != s)
        return r;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!find_coloring(delete_vertex(g, v), s - 1))
            r.surviving.push_back(v);
    r.critical = r.surviving.empty();
    return r;
}

/// Explicit p-coloring of H_{p,q} (p, q >= 4), colors taken mod p:
///  p even, q odd:  odd columns j, even columns j+1;
///  p even, q even: odd columns j, even columns p+1-j;
///  p odd,  q even: odd columns j, even columns p-j with rows 0 and (p+1)/2 swapped;
///  p odd,  q odd:  odd columns below q-1 get j, even columns up to q-1 get j-1,
///                  column q gets p-j with rows 0 and (p+1)/2 swapped.
/// Throws CertificateError if the result is not proper.
inline Coloring explicit_coloring_hpq(std::size_t p, std::size_t q) {
    if (p < 4)
        throw InvalidArgument("the explicit H_{p,q} coloring needs p >= 4 (got p = " + std::to_string(p) + ")");
    if (q < 4)
        throw InvalidArgument("the explicit H_{p,q} coloring needs q >= 4 (got q = " + std::to_string(q) + ")");
    const Graph g = build_hpq(p, q);
    Coloring c{std::vector<std::size_t>(p * q, 0), p};
    auto mod = [p](long long v) { return static_cast<std::size_t>(((v % static_cast<long long>(p)) + p) % p); };
    auto set = [&](std::size_t i, std::size_t j, long long color) { c.colors[GridLabel{i, j}.index(p)] = mod(color); };
    auto reflected_with_swap = [&](std::size_t i) {
        for (std::size_t j = 0; j < p; ++j)
            set(i, j, static_cast<long long>(p) - static_cast<long long>(j));
        std::swap(c.colors[GridLabel{i, 0}.index(p)], c.colors[GridLabel{i, (p + 1) / 2}.index(p)]);
    };

    const bool p_even = p % 2 == 0;
    const bool q_even = q % 2 == 0;
    for (std::size_t i = 1; i <= q; ++i) {
        const bool odd_col = i % 2 == 1;
        if (p_even && !q_even) {
            for (std::size_t j = 0; j < p; ++j)
                set(i, j, static_cast<long long>(j) + (odd_col ? 0 : 1));
        } else if (p_even && q_even) {
            for (std::size_t j = 0; j < p; ++j)
                set(i, j, odd_col ? static_cast<long long>(j) : static_cast<long long>(p + 1) - static_cast<long long>(j));
        } else if (q_even) {
            if (odd_col) {
                for (std::size_t j = 0; j < p; ++j)
                    set(i, j, static_cast<long long>(j));
            } else {
                reflected_with_swap(i);
            }
        } else {
            if (i == q) {
                reflected_with_swap(i);
            } else {
                for (std::size_t j = 0; j < p; ++j)
                    set(i, j, static_cast<long long>(j) - (odd_col ? 0 : 1));
            }
        }
    }
    if (!is_proper(g, c))
        throw CertificateError("explicit coloring of H_{" + std::to_string(p) + "," + std::to_string(q) +
                               "} is not proper");
    return c;
}

struct ConjectureScanReport {
    std::size_t s = 0;
    std::size_t max_w = 0;
    std::uint64_t subsets_examined = 0;
    /// Subsets W (original vertex indices) with G[W] critically (s+1)-chromatic.
    std::vector<std::vector<std::size_t>> hits;
};

/// Tries every W with |W| <= max_w, smallest first, and records those for
/// which the expansion G[W] is critically (s+1)-chromatic. G must be
/// critically s-chromatic. Refuses when more than `budget` subsets would be
/// examined.
inline ConjectureScanReport conjecture_scan(const Graph &g, std::size_t s, std::size_t max_w,
                                            std::uint64_t budget = 100000) {
    if (!is_critically_chromatic(g, s).critical)
        throw InvalidArgument("conjecture scan needs a critically " + std::to_string(s) + "-chromatic graph");
    const std::size_t n = g.vertex_count();
    max_w = std::min(max_w, n);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= max_w; ++k) {
        std::uint64_t c = 1;
        for (std::size_t i = 1; i <= k; ++i)
            c = c * (n - k + i) / i;
        total += c;
        if (total > budget)
            throw BudgetExceeded("conjecture scan would examine more than " + std::to_string(budget) + " subsets");
    }

    ConjectureScanReport r{s, max_w, 0, {}};
    for (std::size_t k = 0; k <= max_w; ++k) {
        std::vector<std::size_t> w(k);
        for (std::size_t i = 0; i < k; ++i)
            w[i] = i;
        while (true) {
            ++r.subsets_examined;
            if (is_critically_chromatic(expand_at(g, w), s + 1).critical)
                r.hits.push_back(w);
            std::size_t i = k;
            while (i > 0 && w[i - 1] == n - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++w[i - 1];
            for (std::size_t jj = i; jj < k; ++jj)
                w[jj] = w[jj - 1] + 1;
        }
    }
    return r;
}

} // namespace cpers

#endif
