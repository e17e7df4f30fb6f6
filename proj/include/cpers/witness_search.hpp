#ifndef CPERS_WITNESS_SEARCH_HPP
#define CPERS_WITNESS_SEARCH_HPP

#include "assoc_primes.hpp"
#include "cover_ideal.hpp"
#include "graph.hpp"
#include "parallel.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cpers {

enum class MembershipStrategy {
    /// Materialize I^s and index its minimal generators.
    expanded_power,
    /// Search for s generators of I whose product divides the query.
    factor_search,
};

/// Membership oracle for I^s.
class PowerMembership {
public:
    PowerMembership(MonomialIdeal base, unsigned s, MembershipStrategy strategy = MembershipStrategy::expanded_power)
        : base_(std::move(base)), s_(s), strategy_(strategy), index_(base_.arity()) {
        if (strategy_ == MembershipStrategy::expanded_power) {
            power_ = power(base_, s_);
            index_ = DivisorIndex(*power_);
        }
    }

    unsigned exponent() const noexcept { return s_; }
    std::size_t arity() const noexcept { return base_.arity(); }
    MembershipStrategy strategy() const noexcept { return strategy_; }

    /// The expanded power, when that strategy is in use.
    const std::optional<MonomialIdeal> &expanded() const noexcept { return power_; }

    bool contains(const Monomial &t) const {
        if (t.arity() != base_.arity())
            throw ArityMismatch(base_.arity(), t.arity());
        if (strategy_ == MembershipStrategy::expanded_power)
            return index_.has_divisor_of(t);
        std::vector<Exponent> rest(t.exponents().begin(), t.exponents().end());
        return factor(rest, s_, 0);
    }

private:
    bool factor(std::vector<Exponent> &rest, unsigned left, std::size_t from) const {
        if (left == 0)
            return true;
        const auto gens = base_.generators();
        for (std::size_t i = from; i < gens.size(); ++i) {
            const auto g = gens[i].exponents();
            bool fits = true;
            for (std::size_t k = 0; k < g.size() && fits; ++k)
                fits = g[k] <= rest[k];
            if (!fits)
                continue;
            for (std::size_t k = 0; k < g.size(); ++k)
                rest[k] -= g[k];
            const bool ok = factor(rest, left - 1, i);
            for (std::size_t k = 0; k < g.size(); ++k)
                rest[k] += g[k];
            if (ok)
                return true;
        }
        return false;
    }

    MonomialIdeal base_;
    unsigned s_;
    MembershipStrategy strategy_;
    std::optional<MonomialIdeal> power_;
    DivisorIndex index_;
};

/// T is a witness for the maximal ideal over the oracle's power: T is not in
/// I^s and T*x is, for every variable x.
inline bool is_max_ideal_witness(const PowerMembership &oracle, const Monomial &t) {
    if (oracle.contains(t))
        return false;
    for (std::size_t k = 0; k < t.arity(); ++k)
        if (!oracle.contains(t * Monomial::variable(t.arity(), k)))
            return false;
    return true;
}

struct PrunedSearchOptions {
    MembershipStrategy membership = MembershipStrategy::expanded_power;
    /// Refuse searches with more candidates than this.
    std::uint64_t candidate_cap = std::uint64_t{1} << 24;
    unsigned threads = default_parallelism();
};

/// Exponent patterns (e_0, ..., e_{p-1}) for one clique of H_{p,q} allowed
/// in a witness for m in Ass(R/J^s): every entry at most s-1 and the total
/// at least s(p-1). Sorted lexicographically.
inline std::vector<std::vector<Exponent>> clique_patterns(std::size_t p, unsigned s) {
    std::vector<std::vector<Exponent>> out;
    if (s == 0)
        return out;
    const std::uint64_t need = std::uint64_t{s} * (p - 1);
    std::vector<Exponent> e(p, 0);
    while (true) {
        std::uint64_t sum = 0;
        for (auto x : e)
            sum += x;
        if (sum >= need)
            out.push_back(e);
        std::size_t i = p;
        while (i > 0) {
            --i;
            if (++e[i] <= s - 1)
                break;
            e[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

/// Search for a monomial T with J^s : T = m, J = J(H_{p,q}), over the
/// candidates cut out by three necessary conditions on such a T:
///  - no exponent reaches s (otherwise T*x in J^s would force T in J^s);
///  - each clique carries total exponent >= s(p-1), because T*x for x
///    outside the clique is a product of s covers and each cover needs p-1
///    vertices of every clique;
///  - T != (prod x)^{s-1} whenever that monomial already lies in J^s.
/// Every surviving candidate is tested with the membership oracle, so the
/// result is exhaustive over that set.
inline AssReport pruned_witness_search(std::size_t p, std::size_t q, unsigned s, const PrunedSearchOptions &opts = {}) {
    if (p < 3 || q < 4)
        throw InvalidArgument("pruned witness search needs H_{p,q} with p >= 3 and q >= 4");
    if (s < 2)
        throw InvalidArgument("pruned witness search needs s >= 2 (got " + std::to_string(s) + ")");

    const Graph g = build_hpq(p, q);
    const std::size_t n = g.vertex_count();
    const MonomialIdeal j = cover_ideal(g, CoverIdealMethod::cover_enumeration);
    const PowerMembership oracle(j, s, opts.membership);

    const auto patterns = clique_patterns(p, s);
    AssReport report{PrimeSupport::maximal(n), s, false, std::nullopt, AssMethod::pruned_search, 0, 0};
    if (patterns.empty())
        return report;

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < q; ++i) {
        if (total > opts.candidate_cap / patterns.size())
            throw BudgetExceeded("pruned witness search exceeds the candidate cap of " +
                                 std::to_string(opts.candidate_cap));
        total *= patterns.size();
    }

    // The all-maximal pattern is the last one in lexicographic order.
    const Monomial top = Monomial(std::vector<Exponent>(n, s - 1));
    const bool skip_top = patterns.back() == std::vector<Exponent>(p, s - 1) && oracle.contains(top);
    const std::uint64_t count = skip_top ? total - 1 : total;

    // Candidate c is the mixed-radix number with column 1 as the most
    // significant digit.
    auto candidate = [&](std::uint64_t c) {
        std::vector<Exponent> e(n, 0);
        for (std::size_t i = q; i-- > 0;) {
            const auto &pat = patterns[c % patterns.size()];
            c /= patterns.size();
            for (std::size_t jj = 0; jj < p; ++jj)
                e[i * p + jj] = pat[jj];
        }
        return Monomial(std::move(e));
    };

    const auto first = first_match(count, opts.threads, [&](std::uint64_t c) {
        return is_max_ideal_witness(oracle, candidate(c));
    });

    if (first) {
        report.member = true;
        report.witness = candidate(*first);
        report.candidates_examined = *first + 1;
        // Re-check the certificate with the other membership strategy.
        const PowerMembership check(j, s,
                                    opts.membership == MembershipStrategy::expanded_power
                                        ? MembershipStrategy::factor_search
                                        : MembershipStrategy::expanded_power);
        if (!is_max_ideal_witness(check, *report.witness))
            throw CertificateError("pruned search witness failed independent re-verification");
    } else {
        report.candidates_examined = count;
    }
    return report;
}

/// M = (prod x)^3 written as M_1 M_2 M_3 M_4 N with every M_i the indicator
/// of a vertex cover of H_q.
struct CubeDecomposition {
    std::array<Monomial, 4> covers;
    Monomial remainder;
};

/// The explicit decomposition for H_q (p = 3), by parity of q.
inline CubeDecomposition cube_decomposition(std::size_t q) {
    if (q < 4)
        throw InvalidArgument("cube decomposition needs q >= 4");
    const std::size_t p = 3;
    const std::size_t n = p * q;
    auto x = [&](std::size_t i, std::size_t j) { return GridLabel{i, j}.index(p); };
    std::array<std::vector<Exponent>, 4> m;
    for (auto &v : m)
        v.assign(n, 0);
    std::vector<Exponent> rem(n, 0);
    auto put = [&](std::size_t which, std::size_t i, std::size_t a, std::size_t b) {
        m[which][x(i, a)] = 1;
        m[which][x(i, b)] = 1;
    };

    if (q % 2 == 1) {
        for (std::size_t i = 1; i <= q; ++i) {
            rem[x(i, 0)] = 1;
            if (i == q) {
                put(0, i, 0, 2);
                put(1, i, 0, 1);
                put(2, i, 1, 2);
                put(3, i, 1, 2);
            } else if (i % 2 == 1) {
                put(0, i, 0, 1);
                put(1, i, 0, 2);
                put(2, i, 1, 2);
                put(3, i, 1, 2);
            } else {
                put(0, i, 1, 2);
                put(1, i, 1, 2);
                put(2, i, 0, 1);
                put(3, i, 0, 2);
            }
        }
    } else {
        for (std::size_t i = 1; i <= q; ++i) {
            rem[x(i, 1)] = 1;
            if (i % 2 == 1) {
                put(0, i, 0, 2);
                put(1, i, 0, 2);
                put(2, i, 0, 1);
                put(3, i, 1, 2);
            } else {
                put(0, i, 0, 1);
                put(1, i, 1, 2);
                put(2, i, 0, 2);
                put(3, i, 0, 2);
            }
        }
    }
    return {{Monomial(m[0]), Monomial(m[1]), Monomial(m[2]), Monomial(m[3])}, Monomial(rem)};
}

/// Each M_i is a squarefree vertex cover of g and M_1 M_2 M_3 M_4 N = (prod x)^3.
inline bool verify_cube_decomposition(const Graph &g, const CubeDecomposition &d) {
    const std::size_t n = g.vertex_count();
    Monomial prod = d.remainder;
    if (prod.arity() != n)
        return false;
    for (const auto &c : d.covers) {
        if (c.arity() != n || !c.is_squarefree())
            return false;
        if (!g.is_vertex_cover(VertexCover{c.support()}.as_set(n)))
            return false;
        prod = prod * c;
    }
    return prod == Monomial(std::vector<Exponent>(n, 3));
}

/// Builds the explicit decomposition of (prod x)^3 for H_q and checks it,
/// which certifies (prod x)^3 in J(H_q)^4.
inline bool verify_obs_power3(std::size_t q) {
    return verify_cube_decomposition(build_hpq(3, q), cube_decomposition(q));
}

} // namespace cpers

#endif
