#ifndef CPERS_HQ_VERIFICATION_HPP
#define CPERS_HQ_VERIFICATION_HPP

#include "assoc_primes.hpp"
#include "coloring.hpp"
#include "cover_ideal.hpp"
#include "witness_search.hpp"

#include <optional>
#include <string>

namespace cpers {

struct HqVerificationOptions {
    /// Needed for q >= 6, and to run the colon route for q >= 5.
    bool allow_slow = false;
    PrunedSearchOptions pruned;
};

/// Everything checked for J = J(H_q): m in Ass(R/J^3), m not in Ass(R/J^4),
/// and the graph-side facts behind them.
struct HqVerdict {
    std::size_t q = 0;
    std::size_t chromatic_number = 0;
    bool critically_4_chromatic = false;
    bool cube_decomposition_ok = false;

    AssReport pruned_s3;
    AssReport pruned_s4;
    /// Present when the assumption-free colon route ran.
    std::optional<AssReport> colon_s3;
    std::optional<AssReport> colon_s4;

    bool routes_agree = true;
    bool max_ideal_in_ass_s3 = false;
    bool max_ideal_in_ass_s4 = false;

    /// m in Ass(R/J^3) but not in Ass(R/J^4).
    bool persistence_fails() const noexcept { return max_ideal_in_ass_s3 && !max_ideal_in_ass_s4; }
    /// depth(R/J^3) = 0 < depth(R/J^4).
    bool non_increasing_depth_fails() const noexcept { return persistence_fails(); }

    std::string verdict() const {
        if (!routes_agree)
            return "routes disagree; no verdict";
        if (persistence_fails())
            return "persistence violated at s=3; non-increasing depth fails";
        return "m in Ass(R/J^3) and m not in Ass(R/J^4) not both established";
    }
};

inline HqVerdict verify_hq(std::size_t q, const HqVerificationOptions &opts = {}) {
    if (q < 4)
        throw InvalidArgument("H_q needs q >= 4");
    if (q >= 6 && !opts.allow_slow)
        throw BudgetExceeded("q >= 6 is slow; pass allow_slow to proceed");

    const Graph g = build_hpq(3, q);
    const auto crit = is_critically_chromatic(g, 4);
    HqVerdict v{.q = q,
                .chromatic_number = crit.chromatic_number,
                .critically_4_chromatic = crit.critical,
                .cube_decomposition_ok = verify_obs_power3(q),
                .pruned_s3 = pruned_witness_search(3, q, 3, opts.pruned),
                .pruned_s4 = pruned_witness_search(3, q, 4, opts.pruned),
                .colon_s3 = std::nullopt,
                .colon_s4 = std::nullopt};
    v.max_ideal_in_ass_s3 = v.pruned_s3.member;
    v.max_ideal_in_ass_s4 = v.pruned_s4.member;

    if (q == 4 || opts.allow_slow) {
        const MonomialIdeal j = cover_ideal(g);
        const MonomialIdeal j3 = power(j, 3);
        v.colon_s3 = max_ideal_in_ass(j3);
        v.colon_s3->power = 3;
        v.colon_s4 = max_ideal_in_ass(product(j3, j));
        v.colon_s4->power = 4;
        v.routes_agree = v.colon_s3->member == v.pruned_s3.member && v.colon_s4->member == v.pruned_s4.member;
    }
    return v;
}

} // namespace cpers

#endif
