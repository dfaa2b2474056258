// Command-line front end: load or generate a matrix, run the identity and
// involution verifications, dump enumerations, and export DOT graphs.
//
// Exit codes: 0 success, 1 a checked identity failed, 2 bad input or usage.

#include "tracech/identities.hpp"
#include "tracech/invariants.hpp"
#include "tracech/involution.hpp"
#include "tracech/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace tracech;

namespace {

constexpr int kMaxOrderDefault = 6;       // oracle and enumeration paths
constexpr int kMaxLengthDefault = 10;     // enumeration length / r_max
constexpr int kMaxPairOrderDefault = 4;   // pair enumeration
constexpr int kMaxPairLengthDefault = 8;

struct InputOpts {
    std::string matrix_path;
    int generic_n = 0;

    WeightedDigraph digraph() const {
        if (generic_n > 0) return generic_digraph(generic_n);
        return WeightedDigraph::from_matrix(load_matrix_file(matrix_path));
    }
};

void add_input_options(CLI::App* cmd, InputOpts& in, bool required = true) {
    auto* grp = cmd->add_option_group("input", "matrix source");
    grp->add_option("--matrix", in.matrix_path, "matrix JSON file");
    grp->add_option("--generic", in.generic_n, "fully symbolic matrix of this order")
        ->check(CLI::PositiveNumber);
    if (required)
        grp->require_option(1);
    else
        grp->require_option(0, 1);
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void enforce_cap(bool force, int value, int cap, const std::string& what) {
    if (!force && value > cap)
        throw UsageError(what + " exceeds the default cap of " + std::to_string(cap) +
                         " (use --force to override)");
}

FormatOptions alias_options(const WeightedDigraph& g) {
    return FormatOptions{g.order() <= 3 ? g.order() : 0};
}

std::string format_walk(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += "→";
        out += std::to_string(vs[i]);
    }
    return out;
}

std::string format_lsd(const LinearSubdigraph& s) {
    if (s.cycles.empty()) return "()";
    std::string out;
    for (const Cycle& c : s.cycles) {
        out += "(";
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(c.vertices[i]);
        }
        out += ")";
    }
    return out;
}

std::string format_pair(const WalkCyclePair& p) {
    return format_walk(p.walk.vertices) + " | " + format_lsd(p.gamma);
}

// Hard safety cap on pair enumeration, adjustable via TRACE_CH_MAX_PAIRS.
Int max_pair_budget() {
    if (const char* env = std::getenv("TRACE_CH_MAX_PAIRS")) {
        try {
            return Int(std::string(env));
        } catch (const std::exception&) {
            throw UsageError("TRACE_CH_MAX_PAIRS is not a valid integer");
        }
    }
    return Int(10000000);
}

Int count_closed_walks(const WeightedDigraph& g, int k) {
    const int n = g.order();
    std::vector<std::vector<Int>> b(n, std::vector<Int>(n, 0));
    for (const auto& [key, w] : g.edges())
        if (!w.is_zero()) b[key.first - 1][key.second - 1] = 1;
    auto p = b;
    for (int step = 1; step < k; ++step) {
        std::vector<std::vector<Int>> next(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                for (int j = 0; j < n; ++j) next[i][j] += p[i][l] * b[l][j];
        p = next;
    }
    Int t = 0;
    for (int i = 0; i < n; ++i) t += p[i][i];
    return t;
}

void enforce_pair_budget(const WeightedDigraph& g, int r) {
    const Int budget = max_pair_budget();
    Int estimate = 0;
    for (int lc = 1; lc <= r; ++lc) {
        const int lg = r - lc;
        if (lg > g.order()) continue;
        Int subs = 0;
        for_each_lsd(g, lg, [&](const LinearSubdigraph&, const RingElement&) { ++subs; });
        estimate += count_closed_walks(g, lc) * subs;
    }
    if (estimate > budget)
        throw UsageError("pair enumeration would visit " + estimate.str() +
                         " pairs, above TRACE_CH_MAX_PAIRS=" + budget.str());
}

void print_identity_report(const IdentityReport& rep, const std::string& heading,
                           const FormatOptions& opt) {
    std::cout << heading << " lhs = " << to_string(rep.lhs, opt) << " ["
              << (rep.holds ? "ok" : "FAILED") << "]\n";
    for (const auto& [label, value] : rep.terms)
        std::cout << "    " << label << " = " << to_string(value, opt) << "\n";
}

// --- verify ---------------------------------------------------------------

struct VerifyOpts {
    InputOpts in;
    bool random = false;
    int random_n = 3;
    int count = 1;
    std::uint64_t seed = 0;
    int r_max = 1;
    std::string format = "text";
    bool force = false;
};

int cmd_verify(const VerifyOpts& o) {
    enforce_cap(o.force, o.r_max, kMaxLengthDefault, "--r-max");
    bool all_hold = true;
    nlohmann::json out_matrices = nlohmann::json::array();

    auto run_one = [&](const WeightedDigraph& g, const std::string& heading,
                       bool detailed) -> SuiteResult {
        enforce_cap(o.force, g.order(), kMaxOrderDefault, "matrix order");
        const SuiteResult res = verify_suite(g, o.r_max);
        all_hold = all_hold && res.all_hold && res.forms_agree;
        const FormatOptions opt = alias_options(g);
        if (o.format == "json") {
            nlohmann::json reports = nlohmann::json::array();
            if (detailed)
                for (const IdentityReport& rep : res.reports) reports.push_back(report_to_json(rep, opt));
            nlohmann::json entry{{"n", g.order()},
                                 {"all_hold", res.all_hold},
                                 {"forms_agree", res.forms_agree}};
            if (detailed) entry["reports"] = reports;
            if (!heading.empty()) entry["label"] = heading;
            out_matrices.push_back(entry);
        } else if (detailed) {
            for (std::size_t i = 0; i + 1 < res.reports.size(); i += 2) {
                const IdentityReport& comb = res.reports[i];
                std::cout << "== r=" << comb.r << " (" << to_string(comb.branch) << ") ==\n";
                print_identity_report(comb, "combinatorial:", opt);
                print_identity_report(res.reports[i + 1], "matrix form:  ", opt);
            }
            std::cout << "forms agree termwise: " << (res.forms_agree ? "yes" : "NO") << "\n";
        } else {
            std::cout << heading << ": " << (res.all_hold && res.forms_agree ? "ok" : "FAILED")
                      << "\n";
        }
        return res;
    };

    if (o.random) {
        for (int i = 0; i < o.count; ++i) {
            const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
            const WeightedDigraph g =
                WeightedDigraph::from_matrix(random_entries(o.random_n, seed));
            run_one(g, "matrix " + std::to_string(i) + " (n=" + std::to_string(o.random_n) +
                           ", seed=" + std::to_string(seed) + ")",
                    false);
        }
    } else {
        run_one(o.in.digraph(), "", true);
    }

    if (o.format == "json") {
        std::cout << nlohmann::json{{"matrices", out_matrices}, {"all_hold", all_hold}}.dump(2)
                  << "\n";
    } else {
        std::cout << (all_hold ? "all identities hold" : "verification FAILED") << "\n";
    }
    return all_hold ? 0 : 1;
}

// --- enumerate ------------------------------------------------------------

struct EnumerateOpts {
    InputOpts in;
    std::string kind;
    int r = -1;
    int k = -1;
    bool force = false;
};

int cmd_enumerate(const EnumerateOpts& o) {
    const WeightedDigraph g = o.in.digraph();
    enforce_cap(o.force, g.order(), kMaxOrderDefault, "matrix order");
    const FormatOptions opt = alias_options(g);
    if (o.kind == "lsd") {
        if (o.r < 0) throw UsageError("enumerate lsd requires --r");
        enforce_cap(o.force, o.r, kMaxLengthDefault, "--r");
        RingElement total;
        for_each_lsd(g, o.r, [&](const LinearSubdigraph& s, const RingElement& w) {
            const int sign = lsd_sign(s);
            std::cout << format_lsd(s) << " sign=" << (sign > 0 ? "+1" : "-1")
                      << " weight=" << to_string(w, opt) << "\n";
            total += sign > 0 ? w : -w;
        });
        std::cout << "ℓ_" << o.r << " = " << to_string(total, opt) << "\n";
    } else {
        if (o.k < 0) throw UsageError("enumerate walks requires --k");
        enforce_cap(o.force, o.k, kMaxLengthDefault, "--k");
        RingElement total;
        for_each_closed_walk(g, o.k, [&](const std::vector<int>& vs, const RingElement& w) {
            std::cout << format_walk(vs) << " weight=" << to_string(w, opt) << "\n";
            total += w;
        });
        std::cout << "c_" << o.k << " = " << to_string(total, opt) << "\n";
    }
    return 0;
}

// --- involution -----------------------------------------------------------

struct InvolutionOpts {
    InputOpts in;
    int r = 1;
    bool show_pairs = false;
    std::string dot_path;
    int pair_index = 0;
    std::string format = "text";
    bool force = false;
};

int cmd_involution(const InvolutionOpts& o) {
    const WeightedDigraph g = o.in.digraph();
    enforce_cap(o.force, g.order(), kMaxPairOrderDefault, "matrix order (pair enumeration)");
    enforce_cap(o.force, o.r, kMaxPairLengthDefault, "--r");
    enforce_pair_budget(g, o.r);

    const FormatOptions opt = alias_options(g);
    const InvolutionReport rep = verify_involution(g, o.r);

    if (o.show_pairs || !o.dot_path.empty()) {
        std::vector<WalkCyclePair> bad;
        for (const WalkCyclePair& p : enumerate_pairs(g, o.r))
            if (classify(p).is_bad()) bad.push_back(p);

        if (o.show_pairs) {
            std::cout << "BAD pairs (" << bad.size() << "):\n";
            for (std::size_t i = 0; i < bad.size(); ++i) {
                const PairClass cls = classify(bad[i]);
                const WalkCyclePair img = phi(bad[i]);
                std::cout << "  #" << i << " " << format_pair(bad[i])
                          << " W=" << to_string(pair_weight(g, bad[i]), opt);
                if (cls.kind == PairClass::Kind::BadScenario1)
                    std::cout << " scenario=1 t=" << cls.t << " y=" << cls.y;
                else
                    std::cout << " scenario=2 s=" << cls.s << " t=" << cls.t;
                std::cout << "  ->  " << format_pair(img)
                          << " W=" << to_string(pair_weight(g, img), opt) << "\n";
            }
            if (o.r <= g.order()) {
                std::cout << "GOOD pairs by source subdigraph:\n";
                for_each_lsd(g, o.r, [&](const LinearSubdigraph& s, const RingElement&) {
                    std::cout << "  " << format_lsd(s) << ":";
                    for (const WalkCyclePair& p : good_pairs_of_lsd(s))
                        std::cout << "  [" << format_pair(p)
                                  << " W=" << to_string(pair_weight(g, p), opt) << "]";
                    std::cout << "\n";
                });
            } else {
                std::cout << "GOOD pairs: none (r > n)\n";
            }
        }

        if (!o.dot_path.empty()) {
            if (bad.empty()) {
                std::cout << "no BAD pairs; nothing to draw\n";
            } else {
                if (o.pair_index < 0 || o.pair_index >= static_cast<int>(bad.size()))
                    throw UsageError("--pair index out of range (have " +
                                     std::to_string(bad.size()) + " BAD pairs)");
                const WalkCyclePair& p = bad[static_cast<std::size_t>(o.pair_index)];
                std::ofstream f(o.dot_path);
                if (!f) throw UsageError("cannot write " + o.dot_path);
                f << pair_to_dot(g, p, phi(p));
                std::cout << "wrote " << o.dot_path << "\n";
            }
        }
    }

    if (o.format == "json") {
        std::cout << report_to_json(rep, opt).dump(2) << "\n";
    } else {
        std::cout << "pairs: " << rep.pair_count << "  bad: " << rep.bad_count
                  << "  good: " << rep.good_count << "\n";
        std::cout << "involution sign-reversing and fixed-point-free: "
                  << (rep.involution_ok && rep.scenario_swap_ok ? "yes" : "NO") << "\n";
        std::cout << "bad sum: " << to_string(rep.bad_sum, opt)
                  << (rep.bad_sum_is_zero ? " (cancels)" : " (DOES NOT CANCEL)") << "\n";
        if (o.r > g.order())
            std::cout << "good pairs: " << (rep.good_empty_above_n ? "none (r > n)" : "UNEXPECTED")
                      << "\n";
        else
            std::cout << "good decomposition into groups of r per subdigraph: "
                      << (rep.good_decomposition_ok ? "ok" : "FAILED") << "\n";
        for (const std::string& f : rep.failures) std::cout << "failure: " << f << "\n";
        std::cout << (rep.all_ok() ? "PASS" : "FAIL") << "\n";
    }
    return rep.all_ok() ? 0 : 1;
}

// --- export-dot -----------------------------------------------------------

struct ExportDotOpts {
    InputOpts in;
    int r = -1;
    bool with_pairs = false;
    std::string out_dir = ".";
    bool force = false;
};

int cmd_export_dot(const ExportDotOpts& o) {
    const WeightedDigraph g = o.in.digraph();
    enforce_cap(o.force, g.order(), kMaxOrderDefault, "matrix order");
    std::filesystem::create_directories(o.out_dir);
    auto write = [&](const std::string& name, const std::string& text) {
        const std::string path = o.out_dir + "/" + name;
        std::ofstream f(path);
        if (!f) throw UsageError("cannot write " + path);
        f << text;
        std::cout << "wrote " << path << "\n";
    };
    write("digraph.dot", to_dot(g));
    if (o.r >= 0) {
        enforce_cap(o.force, o.r, kMaxLengthDefault, "--r");
        int idx = 0;
        for_each_lsd(g, o.r, [&](const LinearSubdigraph& s, const RingElement&) {
            write("lsd_r" + std::to_string(o.r) + "_" + std::to_string(idx) + ".dot",
                  lsd_to_dot(g, s));
            ++idx;
        });
        if (o.with_pairs) {
            enforce_cap(o.force, g.order(), kMaxPairOrderDefault,
                        "matrix order (pair enumeration)");
            enforce_cap(o.force, o.r, kMaxPairLengthDefault, "--r (pair enumeration)");
            enforce_pair_budget(g, o.r);
            int pidx = 0;
            for (const WalkCyclePair& p : enumerate_pairs(g, o.r)) {
                if (!classify(p).is_bad()) continue;
                write("pair_r" + std::to_string(o.r) + "_" + std::to_string(pidx) + ".dot",
                      pair_to_dot(g, p, phi(p)));
                ++pidx;
            }
        }
    }
    return 0;
}

// --- charpoly ---------------------------------------------------------------

struct CharPolyOpts {
    InputOpts in;
    std::string format = "text";
    bool force = false;
};

int cmd_charpoly(const CharPolyOpts& o) {
    const WeightedDigraph g = o.in.digraph();
    enforce_cap(o.force, g.order(), kMaxOrderDefault, "matrix order");
    const FormatOptions opt = alias_options(g);
    const int n = g.order();
    const CharPoly cp = char_poly(g);
    if (o.format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (int i = 1; i <= n; ++i) coeffs.push_back(to_string(cp.d(i), opt));
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 1; r <= n; ++r)
            rows.push_back({{"r", r},
                            {"ell", to_string(ell(g, r), opt)},
                            {"f", to_string(f_minor_sum(g, r), opt)},
                            {"d", to_string(cp.d(r), opt)},
                            {"c", to_string(c_walks(g, r), opt)}});
        std::cout << nlohmann::json{{"n", n}, {"coeffs", coeffs}, {"rows", rows}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "p(λ) = λ^" << n;
    for (int i = 1; i <= n; ++i) {
        std::cout << " + (" << to_string(cp.d(i), opt) << ")";
        if (i < n) {
            std::cout << "λ";
            if (n - i > 1) std::cout << "^" << n - i;
        }
    }
    std::cout << "\n";
    std::cout << "r | ℓ_r | f_r | d_r | c_r\n";
    for (int r = 1; r <= n; ++r) {
        std::cout << r << " | " << to_string(ell(g, r), opt) << " | "
                  << to_string(f_minor_sum(g, r), opt) << " | " << to_string(cp.d(r), opt) << " | "
                  << to_string(c_walks(g, r), opt) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of trace identities over weighted digraphs"};
    app.require_subcommand(1);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "check the trace identities for a matrix");
    add_input_options(verify, vo.in, false);
    auto* rnd = verify->add_flag("--random", vo.random, "verify seeded random integer matrices");
    verify->add_option("--n", vo.random_n, "order of the random matrices")->needs(rnd);
    verify->add_option("--count", vo.count, "number of random matrices")->needs(rnd);
    verify->add_option("--seed", vo.seed, "seed of the first random matrix");
    verify->add_option("--r-max", vo.r_max, "check r = 1..r_max")->required();
    verify->add_option("--format", vo.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--force", vo.force, "override the default size caps");

    EnumerateOpts eo;
    auto* enumerate = app.add_subcommand("enumerate", "dump subdigraphs or closed walks");
    enumerate->add_option("kind", eo.kind, "what to enumerate")
        ->required()
        ->check(CLI::IsMember({"lsd", "walks"}));
    add_input_options(enumerate, eo.in);
    enumerate->add_option("--r", eo.r, "subdigraph length");
    enumerate->add_option("--k", eo.k, "walk length");
    enumerate->add_flag("--force", eo.force, "override the default size caps");

    InvolutionOpts io;
    auto* involution = app.add_subcommand("involution", "run the pair-cancellation checks");
    add_input_options(involution, io.in);
    involution->add_option("--r", io.r, "total pair length")->required();
    involution->add_flag("--show-pairs", io.show_pairs, "list BAD pairs and grouped GOOD pairs");
    involution->add_option("--dot", io.dot_path, "write a before/after DOT picture");
    involution->add_option("--pair", io.pair_index, "BAD pair index for --dot");
    involution->add_option("--format", io.format)->check(CLI::IsMember({"text", "json"}));
    involution->add_flag("--force", io.force, "override the default size caps");

    ExportDotOpts xo;
    auto* export_dot = app.add_subcommand("export-dot", "write DOT files for the digraph");
    add_input_options(export_dot, xo.in);
    export_dot->add_option("--r", xo.r, "also export every subdigraph of this length");
    export_dot->add_flag("--with-pairs", xo.with_pairs, "also export BAD pair pictures");
    export_dot->add_option("--out-dir", xo.out_dir, "output directory");
    export_dot->add_flag("--force", xo.force, "override the default size caps");

    CharPolyOpts co;
    auto* charpoly = app.add_subcommand("charpoly", "characteristic coefficients and walk sums");
    add_input_options(charpoly, co.in);
    charpoly->add_option("--format", co.format)->check(CLI::IsMember({"text", "json"}));
    charpoly->add_flag("--force", co.force, "override the default size caps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (!vo.random && vo.in.matrix_path.empty() && vo.in.generic_n == 0)
                throw UsageError("verify needs --matrix, --generic, or --random");
            return cmd_verify(vo);
        }
        if (enumerate->parsed()) return cmd_enumerate(eo);
        if (involution->parsed()) return cmd_involution(io);
        if (export_dot->parsed()) return cmd_export_dot(xo);
        if (charpoly->parsed()) return cmd_charpoly(co);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
