#ifndef CPERS_TOOLS_CLI_APP_HPP
#define CPERS_TOOLS_CLI_APP_HPP

#include "svg.hpp"

#include <cpers/cpers.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cpers::cli {

enum ExitCode : int {
    ok = 0,
    internal_error = 1,
    usage_error = 2,
    invalid_input = 3,
    io_error = 4,
    budget_refused = 5,
    certificate_failed = 6,
};

enum class OutputFormat { text, json };

/// Options shared by every subcommand.
struct RunConfig {
    std::string subcommand;
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> output_path;
    unsigned threads = default_parallelism();
    std::uint64_t subset_guard = std::uint64_t{1} << 20;
    std::uint64_t candidate_cap = std::uint64_t{1} << 24;
};

/// Where a graph comes from: a file or one of the built-in families.
struct GraphSource {
    std::optional<std::string> file;
    std::optional<std::size_t> p, q, complete, cycle, path;
    std::vector<std::size_t> expand;

    bool given() const { return file || q || complete || cycle || path; }

    Graph load() const {
        int sources = (file ? 1 : 0) + (q ? 1 : 0) + (complete ? 1 : 0) + (cycle ? 1 : 0) + (path ? 1 : 0);
        if (sources != 1)
            throw InvalidArgument("give exactly one of --graph, --q (with optional --p), --complete, --cycle, --path");
        Graph g;
        if (file)
            g = parse_graph(read_file(*file));
        else if (q)
            g = build_hpq(p.value_or(3), *q);
        else if (complete)
            g = complete_graph(*complete);
        else if (cycle)
            g = cycle_graph(*cycle);
        else
            g = path_graph(*path);
        return expand.empty() ? g : expand_at(g, expand);
    }
};

namespace detail {

inline void add_graph_options(CLI::App *sub, GraphSource &src, bool with_hpq = true) {
    sub->add_option("--graph", src.file, "graph file (JSON or edge list)");
    if (with_hpq) {
        sub->add_option("--p", src.p, "clique size of H_{p,q} (default 3)")->check(CLI::Range(3, 64));
        sub->add_option("--q", src.q, "number of columns of H_{p,q}")->check(CLI::Range(4, 64));
    }
    sub->add_option("--complete", src.complete, "complete graph K_n");
    sub->add_option("--cycle", src.cycle, "cycle C_n");
    sub->add_option("--path", src.path, "path on n vertices");
    sub->add_option("--expand", src.expand, "expand at these vertices (comma separated)")->delimiter(',');
}

inline std::vector<std::size_t> parse_var_list(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = cpers::detail::trim(item);
        if (item.empty())
            continue;
        if (item[0] == 'x')
            item.erase(0, 1);
        out.push_back(cpers::detail::parse_count(item, "variable index"));
    }
    return out;
}

inline PrimeSupport parse_prime(const std::string &text, std::size_t arity) {
    if (text == "max")
        return PrimeSupport::maximal(arity);
    return PrimeSupport(arity, parse_var_list(text));
}

inline std::string vertex_list(const Graph &g, const std::vector<std::size_t> &vs) {
    std::string out;
    for (auto v : vs) {
        if (!out.empty())
            out += ' ';
        out += g.label(v);
    }
    return out;
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string prime_name(const PrimeSupport &w) {
    if (w.is_maximal())
        return "m";
    std::string s;
    for (auto k : w.variables())
        s += (s.empty() ? "P{x" : ",x") + std::to_string(k);
    return s + "}";
}

inline std::string ass_line(const AssReport &r) {
    std::string line = prime_name(r.prime) + (r.member ? " in Ass" : " not in Ass");
    if (r.power)
        line += " (power " + std::to_string(*r.power) + ")";
    line += " [" + to_string(r.method) + "]";
    if (r.witness)
        line += " witness " + to_text(*r.witness);
    if (r.method != AssMethod::colon_test)
        line += " candidates " + std::to_string(r.candidates_examined);
    return line;
}

} // namespace detail

/// Builds the command tree and dispatches. Reports go to `out` (or the
/// --output file); diagnostics go to `err`. Returns the process exit code.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Monomial ideals, cover ideals and associated primes of their powers"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string format = "text";
    auto common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", cfg.output_path, "write the report to this file");
        sub->add_option("--threads", cfg.threads, "worker threads (default: $CPERS_THREADS or hardware)")
            ->check(CLI::PositiveNumber);
    };

    // Result of the selected command: JSON body plus text rendering.
    nlohmann::json body;
    std::string text;
    std::function<void()> action;

    GraphSource graph_src;
    std::optional<std::string> ideal_file;
    auto load_ideal = [&](std::optional<unsigned> s = std::nullopt) {
        MonomialIdeal base;
        if (ideal_file) {
            if (graph_src.given())
                throw InvalidArgument("give either --ideal or a graph, not both");
            base = parse_ideal(read_file(*ideal_file));
        } else if (graph_src.given()) {
            base = cover_ideal(graph_src.load());
        } else {
            throw InvalidArgument("an ideal is required: --ideal <file> or a graph source");
        }
        if (s)
            base = power(base, *s);
        return base;
    };
    auto emit_ideal = [&](const MonomialIdeal &ideal) {
        body["ideal"] = to_json(ideal);
        body["generator_count"] = ideal.size();
        text = "arity " + std::to_string(ideal.arity()) + "\n" + to_text(ideal) + "\n";
    };

    // graph
    auto *graph_cmd = app.add_subcommand("graph", "build or read a graph and print it");
    common(graph_cmd);
    detail::add_graph_options(graph_cmd, graph_src);
    graph_cmd->callback([&] {
        action = [&] {
            const Graph g = graph_src.load();
            body["graph"] = to_json(g);
            body["edge_count"] = g.edge_count();
            text = to_text(g);
        };
    });

    // covers
    auto *covers_cmd = app.add_subcommand("covers", "list the minimal vertex covers");
    common(covers_cmd);
    detail::add_graph_options(covers_cmd, graph_src);
    covers_cmd->callback([&] {
        action = [&] {
            const Graph g = graph_src.load();
            const auto covers = minimal_vertex_covers(g);
            for (const auto &c : covers)
                if (!is_minimal_vertex_cover(g, c.as_set(g.vertex_count())))
                    throw CertificateError("enumerated set is not a minimal vertex cover");
            body["covers"] = to_json(covers);
            body["count"] = covers.size();
            for (const auto &c : covers)
                text += detail::vertex_list(g, c.vertices) + "\n";
        };
    });

    // cover-ideal
    std::string method = "both";
    auto *ci_cmd = app.add_subcommand("cover-ideal", "generators of the cover ideal J(G)");
    common(ci_cmd);
    detail::add_graph_options(ci_cmd, graph_src);
    ci_cmd->add_option("--method", method, "edges, covers, or both (cross-checked)")
        ->check(CLI::IsMember({"edges", "covers", "both"}));
    ci_cmd->callback([&] {
        action = [&] {
            const Graph g = graph_src.load();
            const auto m = method == "edges"    ? CoverIdealMethod::edge_intersection
                           : method == "covers" ? CoverIdealMethod::cover_enumeration
                                                : CoverIdealMethod::cross_checked;
            emit_ideal(cover_ideal(g, m));
        };
    });

    // power
    unsigned s_power = 0;
    auto *power_cmd = app.add_subcommand("power", "s-th power of an ideal");
    common(power_cmd);
    power_cmd->add_option("--ideal", ideal_file, "ideal file");
    detail::add_graph_options(power_cmd, graph_src);
    power_cmd->add_option("--s", s_power, "exponent s >= 1")->required()->check(CLI::Range(1u, 64u));
    power_cmd->callback([&] { action = [&] { emit_ideal(load_ideal(s_power)); }; });

    // colon
    std::optional<std::string> by_monomial, by_ideal_file;
    bool by_max = false;
    auto *colon_cmd = app.add_subcommand("colon", "colon ideal I : f or I : K");
    common(colon_cmd);
    colon_cmd->add_option("--ideal", ideal_file, "ideal file");
    detail::add_graph_options(colon_cmd, graph_src);
    colon_cmd->add_option("--power", s_power, "raise the ideal to this power first");
    colon_cmd->add_option("--by", by_monomial, "monomial, e.g. x0^2*x1");
    colon_cmd->add_option("--by-ideal", by_ideal_file, "ideal file");
    colon_cmd->add_flag("--max", by_max, "colon by the maximal ideal");
    colon_cmd->callback([&] {
        action = [&] {
            const auto ideal = load_ideal(s_power == 0 ? std::nullopt : std::optional<unsigned>(s_power));
            const int picks = (by_monomial ? 1 : 0) + (by_ideal_file ? 1 : 0) + (by_max ? 1 : 0);
            if (picks != 1)
                throw InvalidArgument("give exactly one of --by, --by-ideal, --max");
            if (by_monomial)
                emit_ideal(colon(ideal, parse_monomial(*by_monomial, ideal.arity())));
            else if (by_ideal_file)
                emit_ideal(colon(ideal, parse_ideal(read_file(*by_ideal_file), ideal.arity())));
            else
                emit_ideal(colon(ideal, MonomialIdeal::maximal(ideal.arity())));
        };
    });

    // localize
    std::string vars;
    auto *loc_cmd = app.add_subcommand("localize", "monomial localization at a set of variables");
    common(loc_cmd);
    loc_cmd->add_option("--ideal", ideal_file, "ideal file");
    detail::add_graph_options(loc_cmd, graph_src);
    loc_cmd->add_option("--power", s_power, "raise the ideal to this power first");
    loc_cmd->add_option("--vars", vars, "variables to keep, e.g. 0,1,4")->required();
    loc_cmd->callback([&] {
        action = [&] {
            const auto ideal = load_ideal(s_power == 0 ? std::nullopt : std::optional<unsigned>(s_power));
            emit_ideal(localize(ideal, PrimeSupport(ideal.arity(), detail::parse_var_list(vars))));
        };
    });

    // ass
    std::vector<std::string> primes;
    std::string strategy = "pruned";
    std::size_t support_cap = 0;
    auto *ass_cmd = app.add_subcommand("ass", "associated-prime membership");
    common(ass_cmd);
    ass_cmd->add_option("--ideal", ideal_file, "ideal file");
    detail::add_graph_options(ass_cmd, graph_src);
    ass_cmd->add_option("--power", s_power, "raise the ideal to this power first");
    ass_cmd->add_option("--prime", primes, "'max', 'all', or a variable list like 0,1 (repeatable)")->required();
    ass_cmd->add_option("--strategy", strategy, "pruned (colon), full (colon), or witness (exhaustive search)")
        ->check(CLI::IsMember({"pruned", "full", "witness"}));
    ass_cmd->add_option("--support-cap", support_cap, "with --prime all: largest support size");
    ass_cmd->add_option("--subset-guard", cfg.subset_guard, "with --prime all: maximum number of supports");
    ass_cmd->callback([&] {
        action = [&] {
            const auto ideal = load_ideal(s_power == 0 ? std::nullopt : std::optional<unsigned>(s_power));
            std::vector<PrimeSupport> supports;
            for (const auto &p : primes) {
                if (p == "all") {
                    for (auto &w : enumerate_supports(ideal.arity(), {support_cap, cfg.subset_guard}))
                        supports.push_back(std::move(w));
                } else {
                    supports.push_back(detail::parse_prime(p, ideal.arity()));
                }
            }
            nlohmann::json reports = nlohmann::json::array();
            for (const auto &w : supports) {
                AssReport r = strategy == "witness"
                                  ? bounded_witness_search(ideal, w)
                                  : prime_in_ass(ideal, w, strategy == "full" ? ColonStrategy::full : ColonStrategy::pruned);
                if (s_power != 0)
                    r.power = s_power;
                if (r.witness)
                    certify_witness(localize(ideal, w), w, *r.witness);
                reports.push_back(to_json(r));
                text += detail::ass_line(r) + "\n";
            }
            body["reports"] = std::move(reports);
        };
    });

    // persistence
    unsigned s_max = 0;
    auto *pers_cmd = app.add_subcommand("persistence", "compare Ass(R/J^s) and Ass(R/J^{s+1})");
    common(pers_cmd);
    pers_cmd->add_option("--ideal", ideal_file, "ideal file (instead of a graph)");
    detail::add_graph_options(pers_cmd, graph_src);
    pers_cmd->add_option("--smax", s_max, "largest power")->required()->check(CLI::Range(2u, 64u));
    pers_cmd->add_option("--prime", primes, "'max', 'all' (default), or a variable list (repeatable)");
    pers_cmd->add_option("--subset-guard", cfg.subset_guard, "maximum number of supports for a full scan");
    pers_cmd->callback([&] {
        action = [&] {
            const auto j = load_ideal();
            std::optional<std::vector<PrimeSupport>> list;
            bool all = primes.empty();
            for (const auto &p : primes) {
                if (p == "all") {
                    all = true;
                    continue;
                }
                if (!list)
                    list.emplace();
                list->push_back(detail::parse_prime(p, j.arity()));
            }
            if (all && list)
                throw InvalidArgument("--prime all cannot be combined with explicit primes");
            ScanOptions opts;
            opts.subset_guard = cfg.subset_guard;
            const auto report = persistence_check(j, s_max, list, opts);
            body["persistence"] = to_json(report);
            for (const auto &pa : report.powers)
                for (const auto &r : pa.reports)
                    if (r.member)
                        text += detail::ass_line(r) + "\n";
            if (report.persists()) {
                text += "no persistence violations up to s=" + std::to_string(s_max) + "\n";
            } else {
                for (const auto &v : report.violations)
                    text += "violation: " + detail::prime_name(v.prime) + " in Ass at s=" + std::to_string(v.power) +
                            " but not at s=" + std::to_string(v.power + 1) + "\n";
            }
        };
    });

    // witness
    std::size_t w_p = 3, w_q = 4;
    unsigned w_s = 4;
    std::string membership = "expanded";
    auto *wit_cmd = app.add_subcommand("witness", "pruned witness search for m in Ass(R/J(H_{p,q})^s)");
    common(wit_cmd);
    wit_cmd->add_option("--p", w_p, "clique size (default 3)")->check(CLI::Range(3, 16));
    wit_cmd->add_option("--q", w_q, "number of columns")->required()->check(CLI::Range(4, 64));
    wit_cmd->add_option("--s", w_s, "power")->required()->check(CLI::Range(2u, 16u));
    wit_cmd->add_option("--membership", membership, "expanded or factor")
        ->check(CLI::IsMember({"expanded", "factor"}));
    wit_cmd->add_option("--candidate-cap", cfg.candidate_cap, "refuse searches with more candidates");
    wit_cmd->callback([&] {
        action = [&] {
            PrunedSearchOptions opts;
            opts.membership = membership == "factor" ? MembershipStrategy::factor_search
                                                     : MembershipStrategy::expanded_power;
            opts.candidate_cap = cfg.candidate_cap;
            opts.threads = cfg.threads;
            const auto r = pruned_witness_search(w_p, w_q, w_s, opts);
            body["report"] = to_json(r);
            text = detail::ass_line(r) + "\n";
        };
    });

    // verify-obs
    std::size_t obs_q = 4;
    auto *obs_cmd = app.add_subcommand("verify-obs", "check the explicit decomposition of (prod x)^3 in J(H_q)^4");
    common(obs_cmd);
    obs_cmd->add_option("--q", obs_q, "number of columns")->required()->check(CLI::Range(4, 1000));
    obs_cmd->callback([&] {
        action = [&] {
            const auto d = cube_decomposition(obs_q);
            const bool okay = verify_cube_decomposition(build_hpq(3, obs_q), d);
            nlohmann::json covers = nlohmann::json::array();
            for (const auto &c : d.covers)
                covers.push_back(to_text(c));
            body["q"] = obs_q;
            body["verified"] = okay;
            body["covers"] = std::move(covers);
            body["remainder"] = to_text(d.remainder);
            text = detail::yes_no(okay) + "\n";
        };
    });

    // chi
    auto *chi_cmd = app.add_subcommand("chi", "exact chromatic number");
    common(chi_cmd);
    detail::add_graph_options(chi_cmd, graph_src);
    chi_cmd->callback([&] {
        action = [&] {
            const Graph g = graph_src.load();
            const auto r = chromatic_number(g);
            if (!is_proper(g, r.coloring))
                throw CertificateError("coloring certificate is not proper");
            body["chromatic_number"] = r.chromatic_number;
            body["coloring"] = to_json(r.coloring);
            body["clique"] = r.clique;
            body["greedy_upper"] = r.greedy_upper;
            text = std::to_string(r.chromatic_number) + "\n";
        };
    });

    // critical
    std::size_t crit_s = 0;
    auto *crit_cmd = app.add_subcommand("critical", "is the graph critically s-chromatic?");
    common(crit_cmd);
    detail::add_graph_options(crit_cmd, graph_src);
    crit_cmd->add_option("--s", crit_s, "target chromatic number")->required()->check(CLI::PositiveNumber);
    crit_cmd->callback([&] {
        action = [&] {
            const Graph g = graph_src.load();
            const auto r = is_critically_chromatic(g, crit_s);
            nlohmann::json surviving = nlohmann::json::array();
            for (auto v : r.surviving)
                surviving.push_back({{"vertex", v}, {"label", g.label(v)}});
            body["s"] = crit_s;
            body["chromatic_number"] = r.chromatic_number;
            body["critical"] = r.critical;
            body["surviving"] = std::move(surviving);
            text = detail::yes_no(r.critical) + " (chi = " + std::to_string(r.chromatic_number) + ")\n";
            if (!r.surviving.empty())
                text += "deleting keeps chi = " + std::to_string(crit_s) + ": " + detail::vertex_list(g, r.surviving) + "\n";
        };
    });

    // color-hpq
    std::size_t c_p = 4, c_q = 4;
    std::optional<std::string> svg_path;
    auto *color_cmd = app.add_subcommand("color-hpq", "explicit p-coloring of H_{p,q}");
    common(color_cmd);
    color_cmd->add_option("--p", c_p, "clique size, p >= 4")->required();
    color_cmd->add_option("--q", c_q, "number of columns, q >= 4")->required();
    color_cmd->add_option("--emit-svg", svg_path, "write a drawing of the coloring to this file");
    color_cmd->callback([&] {
        action = [&] {
            const Graph g = build_hpq(c_p, c_q);
            const auto c = explicit_coloring_hpq(c_p, c_q);
            if (!is_proper(g, c))
                throw CertificateError("explicit coloring is not proper");
            body["p"] = c_p;
            body["q"] = c_q;
            body["coloring"] = to_json(c);
            body["colors_used"] = distinct_colors(c);
            body["proper"] = true;
            for (std::size_t j = 0; j < c_p; ++j) {
                for (std::size_t i = 1; i <= c_q; ++i)
                    text += (i > 1 ? " " : "") + std::to_string(c.colors[GridLabel{i, j}.index(c_p)]);
                text += "\n";
            }
            if (svg_path) {
                std::ofstream f(*svg_path);
                if (!f)
                    throw std::ios_base::failure("cannot write '" + *svg_path + "'");
                f << render_hpq_svg(c_p, c_q, c);
                body["svg"] = *svg_path;
            }
        };
    });

    // conjecture-scan
    std::size_t scan_s = 0, max_w = 1;
    std::uint64_t scan_budget = 100000;
    auto *scan_cmd = app.add_subcommand("conjecture-scan", "look for W with G[W] critically (s+1)-chromatic");
    common(scan_cmd);
    detail::add_graph_options(scan_cmd, graph_src);
    scan_cmd->add_option("--s", scan_s, "G must be critically s-chromatic")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--max-w", max_w, "largest |W| to try");
    scan_cmd->add_option("--budget", scan_budget, "maximum number of subsets");
    scan_cmd->callback([&] {
        action = [&] {
            const Graph g = graph_src.load();
            const auto r = conjecture_scan(g, scan_s, max_w, scan_budget);
            body["s"] = r.s;
            body["max_w"] = r.max_w;
            body["subsets_examined"] = r.subsets_examined;
            body["hits"] = r.hits;
            text = std::to_string(r.hits.size()) + " hit(s) among " + std::to_string(r.subsets_examined) + " subsets\n";
            for (const auto &w : r.hits)
                text += "W = {" + detail::vertex_list(g, w) + "}\n";
        };
    });

    // verify-paper
    std::size_t vp_q = 4;
    bool allow_slow = false;
    auto *vp_cmd = app.add_subcommand("verify-paper", "m in Ass(R/J^3) and m not in Ass(R/J^4) for J = J(H_q)");
    common(vp_cmd);
    vp_cmd->add_option("--q", vp_q, "number of triangles (default 4)")->check(CLI::Range(4, 64));
    vp_cmd->add_flag("--allow-slow", allow_slow, "permit q >= 6 and run the colon route for q >= 5");
    vp_cmd->callback([&] {
        action = [&] {
            HqVerificationOptions opts;
            opts.allow_slow = allow_slow;
            opts.pruned.threads = cfg.threads;
            const auto v = verify_hq(vp_q, opts);
            if (!v.routes_agree)
                throw CertificateError("colon route and pruned search disagree");
            {
                // Re-check every witness against J^s before reporting it.
                const MonomialIdeal j = cover_ideal(build_hpq(3, vp_q));
                const auto m = PrimeSupport::maximal(j.arity());
                for (const AssReport *r : {&v.pruned_s3, &v.pruned_s4})
                    if (r->witness)
                        certify_witness(power(j, *r->power), m, *r->witness);
                for (const auto *r : {&v.colon_s3, &v.colon_s4})
                    if (*r && (*r)->witness)
                        certify_witness(power(j, *(*r)->power), m, *(*r)->witness);
            }
            body["verification"] = to_json(v);
            text = "H_" + std::to_string(vp_q) + ": chi = " + std::to_string(v.chromatic_number) +
                   ", critically 4-chromatic: " + detail::yes_no(v.critically_4_chromatic) + "\n";
            text += "(prod x)^3 decomposition verified: " + detail::yes_no(v.cube_decomposition_ok) + "\n";
            text += "pruned:  " + detail::ass_line(v.pruned_s3) + "\n";
            text += "pruned:  " + detail::ass_line(v.pruned_s4) + "\n";
            if (v.colon_s3)
                text += "colon:   " + detail::ass_line(*v.colon_s3) + "\n";
            if (v.colon_s4)
                text += "colon:   " + detail::ass_line(*v.colon_s4) + "\n";
            text += "m in Ass(R/J^3): " + detail::yes_no(v.max_ideal_in_ass_s3) + "\n";
            text += "m in Ass(R/J^4): " + detail::yes_no(v.max_ideal_in_ass_s4) + "\n";
            text += "verdict: " + v.verdict() + "\n";
        };
    });

    std::vector<const char *> argv{"cpers"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;
    body = nlohmann::json::object();

    try {
        action();
        std::string rendered;
        if (cfg.format == OutputFormat::json) {
            body["schema"] = 1;
            body["command"] = cfg.subcommand;
            rendered = body.dump(2) + "\n";
        } else {
            rendered = text;
        }
        if (cfg.output_path) {
            std::ofstream f(*cfg.output_path);
            if (!f)
                throw std::ios_base::failure("cannot write '" + *cfg.output_path + "'");
            f << rendered;
        } else {
            out << rendered;
        }
        return ok;
    } catch (const BudgetExceeded &e) {
        err << "refused: " << e.what() << "\n";
        return budget_refused;
    } catch (const CertificateError &e) {
        err << "certificate check failed: " << e.what() << "\n";
        return certificate_failed;
    } catch (const std::ios_base::failure &e) {
        err << "i/o error: " << e.what() << "\n";
        return io_error;
    } catch (const Error &e) {
        err << "invalid input: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
}

} // namespace cpers::cli

#endif
