#ifndef CPERS_IO_HPP
#define CPERS_IO_HPP

#include "graph.hpp"
#include "monomial_ideal.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace cpers {

// Text forms:
//   monomial  "1", "x3", "x0^2*x1"
//   ideal     "(x0*x1, x0*x2)", "(0)" for zero, "(1)" for unit; a file may
//             start with "arity N" and list generators by comma or newline
//   graph     "vertices N", then one "u v" edge per line, optional
//             "label v name" lines; '#' starts a comment
// JSON forms:
//   monomial  [e0, e1, ...]
//   ideal     {"arity": N, "generators": [[...], ...]}
//   graph     {"vertices": N, "labels": [...], "edges": [[u, v], ...]} where
//             edge endpoints may be indices or labels

inline std::string to_text(const Monomial &m) {
    if (m.is_one())
        return "1";
    std::string out;
    for (std::size_t k = 0; k < m.arity(); ++k) {
        if (m[k] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x' + std::to_string(k);
        if (m[k] > 1)
            out += '^' + std::to_string(m[k]);
    }
    return out;
}

inline std::string to_text(const MonomialIdeal &ideal) {
    if (ideal.is_zero())
        return "(0)";
    std::string out = "(";
    bool first = true;
    for (const auto &g : ideal.generators()) {
        if (!first)
            out += ", ";
        first = false;
        out += to_text(g);
    }
    return out + ")";
}

inline nlohmann::json to_json(const Monomial &m) {
    return nlohmann::json(std::vector<Exponent>(m.exponents().begin(), m.exponents().end()));
}

inline nlohmann::json to_json(const MonomialIdeal &ideal) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto &g : ideal.generators())
        gens.push_back(to_json(g));
    return {{"arity", ideal.arity()}, {"generators", std::move(gens)}};
}

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return std::string(s.substr(a, b - a));
}

inline std::string strip_comments(const std::string &text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        out += line;
        out += '\n';
    }
    return out;
}

inline bool looks_like_json(const std::string &text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        return ch == '{' || ch == '[';
    }
    return false;
}

inline std::size_t parse_count(const std::string &s, const std::string &what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (...) {
        throw ParseError("expected a non-negative integer for " + what + ", got '" + s + "'");
    }
    if (pos != s.size() || (!s.empty() && s[0] == '-'))
        throw ParseError("expected a non-negative integer for " + what + ", got '" + s + "'");
    return static_cast<std::size_t>(v);
}

/// Factors of a monomial as (variable, exponent) pairs.
inline std::vector<std::pair<std::size_t, Exponent>> parse_factors(const std::string &text) {
    const std::string t = trim(text);
    std::vector<std::pair<std::size_t, Exponent>> out;
    if (t == "1")
        return out;
    if (t.empty())
        throw ParseError("empty monomial");
    std::stringstream ss(t);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        factor = trim(factor);
        if (factor == "1")
            continue;
        if (factor.size() < 2 || factor[0] != 'x')
            throw ParseError("bad monomial factor '" + factor + "' (expected x<k> or x<k>^<e>)");
        const auto caret = factor.find('^');
        const std::size_t k = parse_count(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1),
                                          "variable index");
        Exponent e = 1;
        if (caret != std::string::npos)
            e = static_cast<Exponent>(parse_count(factor.substr(caret + 1), "exponent"));
        out.emplace_back(k, e);
    }
    return out;
}

inline Monomial build_monomial(const std::vector<std::pair<std::size_t, Exponent>> &factors, std::size_t arity) {
    std::vector<Exponent> e(arity, 0);
    for (const auto &[k, x] : factors) {
        if (k >= arity)
            throw ParseError("variable x" + std::to_string(k) + " out of range for arity " + std::to_string(arity));
        e[k] += x;
    }
    return Monomial(std::move(e));
}

} // namespace detail

/// Parses "x0^2*x1" style text. With no arity, uses one past the largest
/// variable index (at least 1).
inline Monomial parse_monomial(const std::string &text, std::optional<std::size_t> arity = std::nullopt) {
    const auto factors = detail::parse_factors(text);
    std::size_t n = 1;
    for (const auto &f : factors)
        n = std::max(n, f.first + 1);
    return detail::build_monomial(factors, arity.value_or(n));
}

inline Monomial monomial_from_json(const nlohmann::json &j) {
    if (!j.is_array())
        throw ParseError("a JSON monomial is an array of exponents");
    std::vector<Exponent> e;
    for (const auto &x : j) {
        if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
            throw ParseError("exponents must be non-negative integers");
        e.push_back(x.get<Exponent>());
    }
    if (e.empty())
        throw ParseError("a monomial needs at least one variable");
    return Monomial(std::move(e));
}

inline MonomialIdeal ideal_from_json(const nlohmann::json &j, std::optional<std::size_t> arity = std::nullopt) {
    const nlohmann::json *gens = &j;
    if (j.is_object()) {
        if (j.contains("arity"))
            arity = j.at("arity").get<std::size_t>();
        if (!j.contains("generators"))
            throw ParseError("JSON ideal needs a \"generators\" array");
        gens = &j.at("generators");
    }
    if (!gens->is_array())
        throw ParseError("JSON ideal generators must be an array of exponent arrays");
    std::vector<Monomial> out;
    for (const auto &g : *gens)
        out.push_back(monomial_from_json(g));
    if (!arity) {
        if (out.empty())
            throw ParseError("cannot infer the arity of an ideal with no generators");
        arity = out.front().arity();
    }
    return MonomialIdeal::generated_by(*arity, std::move(out));
}

/// Parses either form of an ideal.
inline MonomialIdeal parse_ideal(const std::string &text, std::optional<std::size_t> arity = std::nullopt) {
    if (detail::looks_like_json(text)) {
        try {
            return ideal_from_json(nlohmann::json::parse(text), arity);
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(std::string("invalid JSON ideal: ") + e.what());
        }
    }
    std::string body = detail::strip_comments(text);
    {
        const std::string t = detail::trim(body);
        if (t.rfind("arity", 0) == 0) {
            const auto nl = t.find_first_of("\n;");
            arity = detail::parse_count(detail::trim(t.substr(5, nl == std::string::npos ? std::string::npos : nl - 5)),
                                        "arity");
            body = nl == std::string::npos ? std::string() : t.substr(nl + 1);
        }
    }
    body = detail::trim(body);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')')
            throw ParseError("unbalanced parentheses in ideal");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::vector<std::pair<std::size_t, Exponent>>> factored;
    bool zero = false;
    std::string item;
    for (char &ch : body)
        if (ch == '\n')
            ch = ',';
    std::stringstream ss(body);
    while (std::getline(ss, item, ',')) {
        item = detail::trim(item);
        if (item.empty())
            continue;
        if (item == "0") {
            zero = true;
            continue;
        }
        factored.push_back(detail::parse_factors(item));
    }
    if (!arity) {
        std::size_t n = 0;
        for (const auto &f : factored)
            for (const auto &[k, e] : f)
                n = std::max(n, k + 1);
        if (n == 0)
            throw ParseError("cannot infer the arity of this ideal; add an 'arity N' line");
        arity = n;
    }
    if (zero && !factored.empty())
        throw ParseError("'0' cannot be mixed with other generators");
    std::vector<Monomial> gens;
    for (const auto &f : factored)
        gens.push_back(detail::build_monomial(f, *arity));
    return MonomialIdeal::generated_by(*arity, std::move(gens));
}

inline nlohmann::json to_json(const Graph &g) {
    nlohmann::json labels = nlohmann::json::array();
    bool any = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        labels.push_back(g.label(v));
        any = any || g.has_label(v);
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &[u, v] : g.edges())
        edges.push_back({u, v});
    nlohmann::json out = {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
    if (any)
        out["labels"] = std::move(labels);
    return out;
}

inline std::string to_text(const Graph &g) {
    std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.has_label(v))
            out += "label " + std::to_string(v) + " " + g.label(v) + "\n";
    for (const auto &[u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline Graph graph_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("JSON graph needs \"vertices\" and \"edges\"");
    Graph g(j.at("vertices").get<std::size_t>());
    if (j.contains("labels")) {
        const auto &labels = j.at("labels");
        if (!labels.is_array() || labels.size() != g.vertex_count())
            throw ParseError("\"labels\" must list one name per vertex");
        for (std::size_t v = 0; v < labels.size(); ++v)
            g.set_label(v, labels[v].get<std::string>());
    }
    auto endpoint = [&](const nlohmann::json &e) -> std::size_t {
        if (e.is_string()) {
            if (auto v = g.find_label(e.get<std::string>()))
                return *v;
            throw ParseError("unknown vertex label '" + e.get<std::string>() + "'");
        }
        if (!e.is_number_integer() || e.get<long long>() < 0)
            throw ParseError("edge endpoints must be vertex indices or labels");
        return e.get<std::size_t>();
    };
    for (const auto &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a pair");
        g.add_edge(endpoint(e[0]), endpoint(e[1]));
    }
    return g;
}

/// Parses either form of a graph.
inline Graph parse_graph(const std::string &text) {
    if (detail::looks_like_json(text)) {
        try {
            return graph_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(std::string("invalid JSON graph: ") + e.what());
        }
    }
    std::istringstream in(detail::strip_comments(text));
    std::string line;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        if (!g) {
            if (tok.size() != 2 || tok[0] != "vertices")
                throw ParseError("edge list must start with 'vertices N'");
            g.emplace(detail::parse_count(tok[1], "vertex count"));
            continue;
        }
        if (tok[0] == "label") {
            if (tok.size() != 3)
                throw ParseError("expected 'label <vertex> <name>'");
            g->set_label(detail::parse_count(tok[1], "vertex"), tok[2]);
            continue;
        }
        if (tok.size() != 2)
            throw ParseError("expected an edge 'u v', got '" + detail::trim(line) + "'");
        g->add_edge(detail::parse_count(tok[0], "vertex"), detail::parse_count(tok[1], "vertex"));
    }
    if (!g)
        throw ParseError("empty graph file");
    return *g;
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace cpers

#endif
