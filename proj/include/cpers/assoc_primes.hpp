#ifndef CPERS_ASSOC_PRIMES_HPP
#define CPERS_ASSOC_PRIMES_HPP

#include "cover_ideal.hpp"
#include "monomial_ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cpers {

enum class AssMethod { colon_test, witness_search, pruned_search };

inline std::string to_string(AssMethod m) {
    switch (m) {
    case AssMethod::colon_test:
        return "colon-test";
    case AssMethod::witness_search:
        return "witness-search";
    case AssMethod::pruned_search:
        return "pruned-search";
    }
    return "unknown";
}

/// Outcome of a test "P_W in Ass(R/I)". When `witness` is present it has
/// been checked: T is not in the localized ideal and T*x_k is, for every k in W.
struct AssReport {
    PrimeSupport prime;
    std::optional<unsigned> power;
    bool member = false;
    std::optional<Monomial> witness;
    AssMethod method = AssMethod::colon_test;
    /// Witness searches: number of candidate monomials tested.
    std::uint64_t candidates_examined = 0;
    /// Colon test: minimal generators of (I : P_W) lying outside I.
    std::size_t excess_generators = 0;
};

/// Throws CertificateError unless T is a witness for P_W over `localized`.
inline void certify_witness(const MonomialIdeal &localized, const PrimeSupport &w, const Monomial &t) {
    if (localized.contains(t))
        throw CertificateError("witness lies in the ideal");
    for (auto k : w.variables())
        if (!localized.contains(t * Monomial::variable(t.arity(), k)))
            throw CertificateError("witness times x" + std::to_string(k) + " is not in the ideal");
}

enum class ColonStrategy {
    /// Intersect the colons I : x_k while discarding generators already in I.
    /// Anything in I stays in I under lcm, so the discarded part never
    /// contributes to (I : P) modulo I.
    pruned,
    /// Plain colon_by_ideal followed by a strict-containment test.
    full,
};

/// Minimal generators of I : P_W that are not in I, sorted lexicographically.
/// Empty iff I : P_W = I.
inline std::vector<Monomial> colon_excess(const MonomialIdeal &ideal, const PrimeSupport &w,
                                          ColonStrategy strategy = ColonStrategy::pruned) {
    if (w.arity() != ideal.arity())
        throw ArityMismatch(ideal.arity(), w.arity());
    const std::size_t n = ideal.arity();
    const DivisorIndex in_ideal(ideal);
    auto outside = [&](std::vector<Monomial> gens) {
        std::erase_if(gens, [&](const Monomial &m) { return in_ideal.has_divisor_of(m); });
        return gens;
    };

    if (strategy == ColonStrategy::full) {
        auto c = colon(ideal, w.ideal());
        std::vector<Monomial> gens(c.generators().begin(), c.generators().end());
        return outside(std::move(gens));
    }

    std::vector<MonomialIdeal> parts;
    for (auto k : w.variables()) {
        const Monomial x = Monomial::variable(n, k);
        std::vector<Monomial> gens;
        for (const auto &g : ideal.generators())
            if (g[k] != 0)
                gens.push_back(colon(g, x));
        auto part = MonomialIdeal::generated_by(n, outside(std::move(gens)));
        if (part.is_zero())
            return {};
        parts.push_back(std::move(part));
    }
    std::stable_sort(parts.begin(), parts.end(),
                     [](const MonomialIdeal &a, const MonomialIdeal &b) { return a.size() < b.size(); });

    MonomialIdeal acc = parts.front();
    for (std::size_t i = 1; i < parts.size() && !acc.is_zero(); ++i) {
        // Most pairwise lcms land in I; test them before materializing.
        std::vector<Monomial> cand;
        std::vector<Exponent> buf(n);
        for (const auto &a : acc.generators()) {
            const auto ea = a.exponents();
            for (const auto &b : parts[i].generators()) {
                const auto eb = b.exponents();
                for (std::size_t k = 0; k < n; ++k)
                    buf[k] = std::max(ea[k], eb[k]);
                if (!in_ideal.has_divisor_of(buf))
                    cand.emplace_back(buf);
            }
        }
        acc = MonomialIdeal::generated_by(n, std::move(cand));
    }
    return {acc.generators().begin(), acc.generators().end()};
}

namespace detail {

inline AssReport colon_report(const MonomialIdeal &localized, const PrimeSupport &w, ColonStrategy strategy) {
    AssReport r{w, std::nullopt, false, std::nullopt, AssMethod::colon_test, 0, 0};
    if (localized.is_unit() || localized.is_zero())
        return r;
    auto excess = colon_excess(localized, w, strategy);
    r.excess_generators = excess.size();
    r.member = !excess.empty();
    if (r.member) {
        r.witness = excess.front();
        certify_witness(localized, w, *r.witness);
    }
    return r;
}

} // namespace detail

/// Is the maximal ideal associated to R/I? Equivalent to I : m strictly
/// containing I, i.e. depth(R/I) = 0. The witness is the lexicographically
/// least generator of I : m outside I.
inline AssReport max_ideal_in_ass(const MonomialIdeal &ideal, ColonStrategy strategy = ColonStrategy::pruned) {
    if (ideal.is_zero())
        throw InvalidArgument("associated primes of the zero ideal are not monomial primes");
    if (ideal.is_unit())
        throw InvalidArgument("the unit ideal has no associated primes");
    return detail::colon_report(ideal, PrimeSupport::maximal(ideal.arity()), strategy);
}

/// Is P_W associated to R/I? Localizes at W, then runs the maximal-ideal test
/// in the variables of W.
inline AssReport prime_in_ass(const MonomialIdeal &ideal, const PrimeSupport &w,
                              ColonStrategy strategy = ColonStrategy::pruned) {
    return detail::colon_report(localize(ideal, w), w, strategy);
}

/// Exhaustive witness search over the box 0 <= T_k < d_k (k in W), where d_k
/// is the largest exponent of x_k among the localized generators. Any
/// witness can be reduced into that box, so the search is complete. Used as
/// an independent oracle for the colon test.
inline AssReport bounded_witness_search(const MonomialIdeal &ideal, const PrimeSupport &w,
                                        std::uint64_t budget = std::uint64_t{1} << 24) {
    const auto localized = localize(ideal, w);
    AssReport r{w, std::nullopt, false, std::nullopt, AssMethod::witness_search, 0, 0};
    if (localized.is_unit() || localized.is_zero())
        return r;
    const std::size_t n = ideal.arity();
    const auto &vars = w.variables();
    std::vector<Exponent> bound(vars.size(), 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (const auto &g : localized.generators())
            bound[i] = std::max(bound[i], g[vars[i]]);
        if (bound[i] == 0)
            return r;
        total *= bound[i];
        if (total > budget)
            throw BudgetExceeded("bounded witness search needs more than " + std::to_string(budget) + " candidates");
    }
    // Odometer over the box; candidates visited in lexicographic order.
    std::vector<Exponent> e(n, 0);
    while (true) {
        ++r.candidates_examined;
        Monomial t(e);
        bool ok = !localized.contains(t);
        for (std::size_t i = 0; ok && i < vars.size(); ++i)
            ok = localized.contains(t * Monomial::variable(n, vars[i]));
        if (ok) {
            r.member = true;
            r.witness = t;
            certify_witness(localized, w, t);
            return r;
        }
        std::size_t i = vars.size();
        while (i > 0) {
            --i;
            if (++e[vars[i]] < bound[i])
                break;
            e[vars[i]] = 0;
            if (i == 0)
                return r;
        }
    }
}

struct ScanOptions {
    /// Only supports with at most this many variables (0 = no limit).
    std::size_t support_cap = 0;
    /// Maximum number of subsets the scan may enumerate.
    std::uint64_t subset_guard = std::uint64_t{1} << 20;
    ColonStrategy strategy = ColonStrategy::pruned;
};

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace detail

/// All nonempty supports W with |W| <= cap, by increasing size then
/// lexicographically. Refuses (BudgetExceeded) rather than truncating.
inline std::vector<PrimeSupport> enumerate_supports(std::size_t arity, const ScanOptions &opts) {
    const std::size_t cap = opts.support_cap == 0 ? arity : std::min(opts.support_cap, arity);
    std::uint64_t count = 0;
    for (std::size_t k = 1; k <= cap; ++k) {
        count += detail::binomial(arity, k);
        if (count > opts.subset_guard)
            throw BudgetExceeded("prime scan over " + std::to_string(arity) + " variables exceeds the subset guard of " +
                                 std::to_string(opts.subset_guard));
    }
    std::vector<PrimeSupport> out;
    out.reserve(count);
    for (std::size_t k = 1; k <= cap; ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            out.emplace_back(arity, pick);
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == arity - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

/// prime_in_ass for every support allowed by `opts`.
inline std::vector<AssReport> ass_scan(const MonomialIdeal &ideal, const ScanOptions &opts = {}) {
    std::vector<AssReport> out;
    for (const auto &w : enumerate_supports(ideal.arity(), opts))
        out.push_back(prime_in_ass(ideal, w, opts.strategy));
    return out;
}

/// The members of ass_scan.
inline std::vector<PrimeSupport> associated_primes(const MonomialIdeal &ideal, const ScanOptions &opts = {}) {
    std::vector<PrimeSupport> out;
    for (const auto &r : ass_scan(ideal, opts))
        if (r.member)
            out.push_back(r.prime);
    return out;
}

struct PersistenceViolation {
    unsigned power;
    PrimeSupport prime;
};

struct PowerAss {
    unsigned power;
    std::vector<AssReport> reports;
};

struct PersistenceReport {
    std::vector<PowerAss> powers;
    /// (s, P) with P in Ass(R/J^s) but not in Ass(R/J^{s+1}).
    std::vector<PersistenceViolation> violations;

    bool persists() const noexcept { return violations.empty(); }
};

/// Compares Ass(R/J^s) with Ass(R/J^{s+1}) for s = 1..s_max-1, either over
/// every support the scan options allow or over an explicit prime list.
inline PersistenceReport persistence_check(const MonomialIdeal &j, unsigned s_max,
                                           const std::optional<std::vector<PrimeSupport>> &primes = std::nullopt,
                                           const ScanOptions &opts = {}) {
    if (s_max < 2)
        throw InvalidArgument("persistence check needs s_max >= 2");
    const auto supports = primes ? *primes : enumerate_supports(j.arity(), opts);
    for (const auto &w : supports)
        if (w.arity() != j.arity())
            throw ArityMismatch(j.arity(), w.arity());

    PersistenceReport report;
    MonomialIdeal js = MonomialIdeal::unit(j.arity());
    for (unsigned s = 1; s <= s_max; ++s) {
        js = product(js, j);
        PowerAss pa{s, {}};
        for (const auto &w : supports) {
            auto r = prime_in_ass(js, w, opts.strategy);
            r.power = s;
            pa.reports.push_back(std::move(r));
        }
        report.powers.push_back(std::move(pa));
    }

    for (unsigned s = 1; s < s_max; ++s) {
        const auto &now = report.powers[s - 1].reports;
        const auto &next = report.powers[s].reports;
        for (std::size_t i = 0; i < supports.size(); ++i) {
            if (!now[i].member || next[i].member)
                continue;
            // Re-verify both memberships before recording the violation.
            const auto js_now = power(j, s);
            const auto js_next = product(js_now, j);
            if (prime_in_ass(js_now, supports[i], opts.strategy).member &&
                !prime_in_ass(js_next, supports[i], opts.strategy).member)
                report.violations.push_back({s, supports[i]});
            else
                throw CertificateError("persistence violation did not reproduce on re-verification");
        }
    }
    return report;
}

} // namespace cpers

#endif
