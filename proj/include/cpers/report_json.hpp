#ifndef CPERS_REPORT_JSON_HPP
#define CPERS_REPORT_JSON_HPP

#include "assoc_primes.hpp"
#include "coloring.hpp"
#include "hq_verification.hpp"
#include "io.hpp"
#include "vertex_covers.hpp"

#include <json.hpp>

namespace cpers {

inline nlohmann::json to_json(const PrimeSupport &w) {
    return {{"support", w.variables()}, {"maximal", w.is_maximal()}};
}

inline nlohmann::json to_json(const AssReport &r) {
    nlohmann::json j = {{"prime", to_json(r.prime)},
                        {"member", r.member},
                        {"method", to_string(r.method)},
                        {"witness", r.witness ? to_json(*r.witness) : nlohmann::json(nullptr)},
                        {"witness_text", r.witness ? nlohmann::json(to_text(*r.witness)) : nlohmann::json(nullptr)}};
    j["power"] = r.power ? nlohmann::json(*r.power) : nlohmann::json(nullptr);
    if (r.method == AssMethod::colon_test)
        j["excess_generators"] = r.excess_generators;
    else
        j["candidates_examined"] = r.candidates_examined;
    return j;
}

inline nlohmann::json to_json(const PersistenceReport &r) {
    nlohmann::json powers = nlohmann::json::array();
    for (const auto &pa : r.powers) {
        nlohmann::json reports = nlohmann::json::array();
        for (const auto &a : pa.reports)
            reports.push_back(to_json(a));
        powers.push_back({{"power", pa.power}, {"reports", std::move(reports)}});
    }
    nlohmann::json violations = nlohmann::json::array();
    for (const auto &v : r.violations)
        violations.push_back({{"power", v.power}, {"prime", to_json(v.prime)}});
    return {{"powers", std::move(powers)}, {"violations", std::move(violations)}, {"persists", r.persists()}};
}

inline nlohmann::json to_json(const Coloring &c) {
    return {{"colors", c.colors}, {"num_colors", c.num_colors}};
}

inline nlohmann::json to_json(const std::vector<VertexCover> &covers) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &c : covers)
        out.push_back(c.vertices);
    return out;
}

inline nlohmann::json to_json(const HqVerdict &v) {
    nlohmann::json j = {{"q", v.q},
                        {"chromatic_number", v.chromatic_number},
                        {"critically_4_chromatic", v.critically_4_chromatic},
                        {"cube_decomposition_ok", v.cube_decomposition_ok},
                        {"pruned_s3", to_json(v.pruned_s3)},
                        {"pruned_s4", to_json(v.pruned_s4)},
                        {"colon_s3", v.colon_s3 ? to_json(*v.colon_s3) : nlohmann::json(nullptr)},
                        {"colon_s4", v.colon_s4 ? to_json(*v.colon_s4) : nlohmann::json(nullptr)},
                        {"routes_agree", v.routes_agree},
                        {"max_ideal_in_ass_s3", v.max_ideal_in_ass_s3},
                        {"max_ideal_in_ass_s4", v.max_ideal_in_ass_s4},
                        {"persistence_fails", v.persistence_fails()},
                        {"non_increasing_depth_fails", v.non_increasing_depth_fails()},
                        {"verdict", v.verdict()}};
    return j;
}

} // namespace cpers

#endif
