#ifndef CPERS_COVER_IDEAL_HPP
#define CPERS_COVER_IDEAL_HPP

#include "graph.hpp"
#include "monomial_ideal.hpp"
#include "vertex_covers.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cpers {

/// A nonempty set W of variable indices, standing for the monomial prime
/// P_W = (x_k : k in W) in a ring with `arity` variables.
class PrimeSupport {
public:
    PrimeSupport(std::size_t arity, std::vector<std::size_t> vars) : arity_(arity), vars_(std::move(vars)) {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        if (vars_.empty())
            throw InvalidArgument("a prime support must name at least one variable");
        if (vars_.back() >= arity_)
            throw InvalidArgument("prime support variable " + std::to_string(vars_.back()) +
                                  " out of range for arity " + std::to_string(arity_));
    }

    /// The homogeneous maximal ideal (x_0, ..., x_{n-1}).
    static PrimeSupport maximal(std::size_t arity) {
        std::vector<std::size_t> all(arity);
        for (std::size_t k = 0; k < arity; ++k)
            all[k] = k;
        return PrimeSupport(arity, std::move(all));
    }

    std::size_t arity() const noexcept { return arity_; }
    const std::vector<std::size_t> &variables() const noexcept { return vars_; }
    bool is_maximal() const noexcept { return vars_.size() == arity_; }
    bool contains(std::size_t k) const { return std::binary_search(vars_.begin(), vars_.end(), k); }

    MonomialIdeal ideal() const {
        std::vector<Monomial> gens;
        for (auto k : vars_)
            gens.push_back(Monomial::variable(arity_, k));
        return MonomialIdeal::generated_by(arity_, std::move(gens));
    }

    friend bool operator==(const PrimeSupport &, const PrimeSupport &) = default;
    friend auto operator<=>(const PrimeSupport &a, const PrimeSupport &b) {
        if (auto c = a.vars_.size() <=> b.vars_.size(); c != 0)
            return c;
        return a.vars_ <=> b.vars_;
    }

private:
    std::size_t arity_;
    std::vector<std::size_t> vars_;
};

/// J(G) as the intersection of the edge primes (x, y). An edgeless graph
/// gives the unit ideal.
inline MonomialIdeal cover_ideal_by_edges(const Graph &g) {
    const std::size_t n = g.vertex_count();
    std::vector<MonomialIdeal> primes;
    for (const auto &[u, v] : g.edges())
        primes.push_back(MonomialIdeal::generated_by(n, {Monomial::variable(n, u), Monomial::variable(n, v)}));
    return intersect_all(n, std::move(primes));
}

/// J(G) from the indicator monomials of the minimal vertex covers.
inline MonomialIdeal cover_ideal_by_covers(const Graph &g) {
    const std::size_t n = g.vertex_count();
    std::vector<Monomial> gens;
    for (const auto &c : minimal_vertex_covers(g))
        gens.push_back(Monomial::indicator(n, c.vertices));
    return MonomialIdeal::generated_by(n, std::move(gens));
}

enum class CoverIdealMethod { edge_intersection, cover_enumeration, cross_checked };

/// The cover ideal J(G). With `cross_checked` both constructions run and
/// must agree.
inline MonomialIdeal cover_ideal(const Graph &g, CoverIdealMethod method = CoverIdealMethod::cross_checked) {
    switch (method) {
    case CoverIdealMethod::edge_intersection:
        return cover_ideal_by_edges(g);
    case CoverIdealMethod::cover_enumeration:
        return cover_ideal_by_covers(g);
    case CoverIdealMethod::cross_checked:
        break;
    }
    auto by_covers = cover_ideal_by_covers(g);
    if (!(cover_ideal_by_edges(g) == by_covers))
        throw CertificateError("cover ideal constructions disagree");
    return by_covers;
}

/// Monomial localization at W: every variable outside W is set to 1. The
/// arity is kept, with the other variables at exponent 0.
inline MonomialIdeal localize(const MonomialIdeal &ideal, const PrimeSupport &w) {
    if (w.arity() != ideal.arity())
        throw ArityMismatch(ideal.arity(), w.arity());
    std::vector<bool> keep(ideal.arity(), false);
    for (auto k : w.variables())
        keep[k] = true;
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto &g : ideal.generators()) {
        Monomial m = g;
        for (std::size_t k = 0; k < m.arity(); ++k)
            if (!keep[k] && m[k] != 0)
                m = m.with(k, 0);
        gens.push_back(std::move(m));
    }
    return MonomialIdeal::generated_by(ideal.arity(), std::move(gens));
}

} // namespace cpers

#endif
