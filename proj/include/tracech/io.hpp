#pragma once

#include "tracech/digraph.hpp"
#include "tracech/identities.hpp"
#include "tracech/involution.hpp"
#include "tracech/parse.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracech {

/// Reads {"n": <int>, "entries": [[<expr-string>, ...], ...]}. The string
/// "@" in a cell stands for the generic indeterminate of that cell.
inline Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON must be an object with fields \"n\" and \"entries\"");
    const int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("\"entries\" must be an n x n array of expression strings");
    Matrix m(n, std::vector<RingElement>(n));
    for (int i = 0; i < n; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("\"entries\" must be an n x n array of expression strings");
        for (int k = 0; k < n; ++k) {
            const auto& cell = row.at(k);
            if (!cell.is_string())
                throw std::invalid_argument("matrix cells must be expression strings");
            const std::string text = cell.get<std::string>();
            m[i][k] = text == "@" ? RingElement::variable({i + 1, k + 1}) : parse_expr(text, n);
        }
    }
    return m;
}

inline Matrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    nlohmann::json j;
    in >> j;
    return matrix_from_json(j);
}

/// Seed-determined random integer matrix with entries drawn uniformly from
/// [lo, hi]. Uses the portable mt19937_64 stream directly so the same seed
/// produces the same matrix everywhere.
inline Matrix random_entries(int n, std::uint64_t seed, int lo = -9, int hi = 9) {
    if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
    if (lo > hi) throw std::invalid_argument("empty entry range");
    std::mt19937_64 gen(seed);
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    Matrix m(n, std::vector<RingElement>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = RingElement(static_cast<long long>(lo + static_cast<long long>(gen() % span)));
    return m;
}

inline nlohmann::json report_to_json(const IdentityReport& rep, const FormatOptions& opt = {}) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [label, value] : rep.terms)
        terms.push_back({{"label", label}, {"expr", to_string(value, opt)}});
    return nlohmann::json{{"n", rep.n},
                          {"r", rep.r},
                          {"branch", to_string(rep.branch)},
                          {"terms", terms},
                          {"lhs", to_string(rep.lhs, opt)},
                          {"holds", rep.holds}};
}

inline nlohmann::json report_to_json(const InvolutionReport& rep, const FormatOptions& opt = {}) {
    return nlohmann::json{{"n", rep.n},
                          {"r", rep.r},
                          {"pairs", rep.pair_count},
                          {"bad", rep.bad_count},
                          {"good", rep.good_count},
                          {"involution_ok", rep.involution_ok},
                          {"scenario_swap_ok", rep.scenario_swap_ok},
                          {"bad_sum", to_string(rep.bad_sum, opt)},
                          {"bad_sum_is_zero", rep.bad_sum_is_zero},
                          {"good_sum", to_string(rep.good_sum, opt)},
                          {"good_decomposition_ok", rep.good_decomposition_ok},
                          {"good_empty_above_n", rep.good_empty_above_n},
                          {"failures", rep.failures},
                          {"all_ok", rep.all_ok()}};
}

namespace detail {

inline void append_pair_cluster(std::string& out, const std::string& prefix,
                                const std::string& title, const WalkCyclePair& p,
                                const WeightedDigraph& g, const FormatOptions& opt) {
    out += "  subgraph cluster_" + prefix + " {\n    label=\"" + title + "\";\n";
    for (int v = 1; v <= g.order(); ++v)
        out += "    " + prefix + std::to_string(v) + " [label=\"v" + std::to_string(v) + "\"];\n";
    const auto& xs = p.walk.vertices;
    for (std::size_t t = 0; t + 1 < xs.size(); ++t) {
        const RingElement* w = g.edge(xs[t], xs[t + 1]);
        out += "    " + prefix + std::to_string(xs[t]) + " -> " + prefix + std::to_string(xs[t + 1]) +
               " [color=red, label=\"" + std::to_string(t + 1) + ": " +
               (w ? to_string(*w, opt) : std::string("?")) + "\"];\n";
    }
    for (const Cycle& c : p.gamma.cycles) {
        for (int t = 0; t < c.length(); ++t) {
            const int u = c.vertices[static_cast<std::size_t>(t)];
            const int v = c.vertices[static_cast<std::size_t>((t + 1) % c.length())];
            const RingElement* w = g.edge(u, v);
            out += "    " + prefix + std::to_string(u) + " -> " + prefix + std::to_string(v) +
                   " [color=blue, label=\"" + (w ? to_string(*w, opt) : std::string("?")) + "\"];\n";
        }
    }
    out += "  }\n";
}

}  // namespace detail

/// One linear subdigraph drawn on the full vertex set, cycle edges blue.
inline std::string lsd_to_dot(const WeightedDigraph& g, const LinearSubdigraph& s,
                              const std::string& name = "lsd") {
    FormatOptions opt{g.order() <= 3 ? g.order() : 0};
    std::string out = "digraph " + name + " {\n  rankdir=LR;\n";
    for (int v = 1; v <= g.order(); ++v) out += "  v" + std::to_string(v) + ";\n";
    for (const Cycle& c : s.cycles) {
        for (int t = 0; t < c.length(); ++t) {
            const int u = c.vertices[static_cast<std::size_t>(t)];
            const int w = c.vertices[static_cast<std::size_t>((t + 1) % c.length())];
            const RingElement* e = g.edge(u, w);
            out += "  v" + std::to_string(u) + " -> v" + std::to_string(w) +
                   " [color=blue, label=\"" + (e ? to_string(*e, opt) : std::string("?")) + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

/// Before/after picture of one involution step: the pair on the left, its
/// phi image on the right; walk edges red (numbered), gamma edges blue.
inline std::string pair_to_dot(const WeightedDigraph& g, const WalkCyclePair& before,
                               const WalkCyclePair& after) {
    FormatOptions opt{g.order() <= 3 ? g.order() : 0};
    std::string out = "digraph involution_step {\n";
    detail::append_pair_cluster(out, "b", "before", before, g, opt);
    detail::append_pair_cluster(out, "a", "after", after, g, opt);
    out += "}\n";
    return out;
}

}  // namespace tracech
