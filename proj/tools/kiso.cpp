// kiso: command-line front end for the k-isolation toolkit.
//
// Exit status: 0 success, 1 usage or parse error, 2 verification violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kiso/bounds.hpp"
#include "kiso/errors.hpp"
#include "kiso/families.hpp"
#include "kiso/io.hpp"
#include "kiso/isolation.hpp"
#include "kiso/sweep.hpp"

namespace {

using namespace kiso;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct InputOptions {
    std::string path = "-";
    bool graph6 = false;
};

Graph read_graph(const InputOptions& in) {
    std::string text;
    if (in.path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(in.path);
        if (!f) throw GraphError("cannot open " + in.path);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return in.graph6 ? decode_graph6(text) : parse_edge_list(text);
}

void add_input(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input", in.path, "edge-list file, '-' for stdin")->default_val("-");
    cmd->add_flag("--graph6", in.graph6, "input is graph6 instead of an edge list");
}

std::optional<Tree> try_tree(const Graph& g) {
    if (g.order() == 0 || !is_connected(g) || g.size() != g.order() - 1) return std::nullopt;
    return as_tree(g);
}

void print_generated(const Graph& g, const nlohmann::json& cert) {
    write_edge_list(std::cout, g);
    std::cout << "# certificate " << cert.dump() << '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (Vertex v : parse_vertex_list(text)) out.push_back(v);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact k-isolation numbers, bounds and extremal families for trees"};
    app.require_subcommand(1);

    InputOptions in;
    int k = 1;

    auto* solve = app.add_subcommand("solve", "print iota_k of the input graph");
    add_input(solve, in);
    solve->add_option("--k", k, "star size k >= 1")->required();
    bool witness = false;
    std::optional<int> size_cap;
    solve->add_flag("--witness", witness, "also print a minimum set");
    solve->add_option("--size-cap", size_cap, "largest set size to try (brute force on n > 16)");

    auto* bounds = app.add_subcommand("bounds", "evaluate every bound for a tree");
    add_input(bounds, in);
    bounds->add_option("--k", k, "star size k >= 1")->required();
    bool as_json = false;
    bounds->add_flag("--json", as_json, "JSON output");

    auto* verify = app.add_subcommand("verify-set", "check whether a vertex set is k-isolating");
    add_input(verify, in);
    verify->add_option("--k", k, "star size k >= 1")->required();
    std::string set_text;
    verify->add_option("--set", set_text, "comma-separated vertices")->required();

    auto* recognize = app.add_subcommand("recognize", "test family membership and print a certificate");
    add_input(recognize, in);
    std::string family;
    recognize->add_option("--family", family, "F, Tk or corona-char")
        ->required()
        ->check(CLI::IsMember({"F", "Tk", "corona-char"}));
    recognize->add_option("--k", k, "star size (Tk, corona-char)");

    auto* generate = app.add_subcommand("generate", "emit a family member with its certificate");
    generate->set_help_flag("--help", "Print this help message and exit"); // frees -h for --h
    generate->add_option("--family", family, "F, Tk, corona-extremal, c4, corona-char, spider or twin")
        ->required()
        ->check(CLI::IsMember({"F", "Tk", "corona-extremal", "c4", "corona-char", "spider", "twin"}));
    int r = 2, s = 0, n = 0, n0 = 2, h = 1, m = 2, extra = 1;
    std::optional<std::uint64_t> gen_seed;
    std::string leaves_text;
    generate->add_option("--k", k, "star size");
    generate->add_option("--r", r, "P3 copies (F, twin) or path order (corona-extremal)");
    generate->add_option("--s", s, "P4 copies (F, twin)");
    generate->add_option("--n", n, "order (corona-extremal; default (k+2)r)");
    generate->add_option("--n0", n0, "A vertices (Tk)");
    generate->add_option("--h", h, "A components (Tk)");
    generate->add_option("--m", m, "order of the path H (corona-char)");
    generate->add_option("--extra", extra, "twin leaves added at each support (twin)");
    generate->add_option("--leaves", leaves_text, "four leaf counts a,b,c,d (c4; default k each)");
    generate->add_option("--seed", gen_seed, "random wiring (F, Tk, twin)");

    auto* sweep = app.add_subcommand("sweep", "exhaustive check over all free trees");
    SweepConfig cfg;
    std::string k_list = "1", checks = "all", out_path;
    sweep->add_option("--max-n", cfg.max_n, "largest order")->required();
    sweep->add_option("--min-n", cfg.min_n, "smallest order");
    sweep->add_option("--k-list", k_list, "comma-separated k values");
    sweep->add_option("--checks", checks, "comma-separated suites or 'all'");
    sweep->add_option("--out", out_path, "JSON-lines output file");
    sweep->add_option("--jobs", cfg.jobs, "worker threads");
    sweep->add_option("--seed", cfg.seed, "seed for randomized choices");
    sweep->add_flag("--force-bruteforce", cfg.force_bruteforce, "brute-force cross-check up to n = 16");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            Graph g = read_graph(in);
            IsolationSolution sol;
            if (auto t = try_tree(g)) {
                sol = iota_tree_dp(*t, k);
            } else {
                if (!is_connected(g)) throw GraphError("input graph is disconnected");
                sol = iota_bruteforce(g, k, size_cap);
            }
            std::cout << sol.size() << '\n';
            if (witness) std::cout << format_vertex_list(sol.set) << '\n';
            return kExitOk;
        }
        if (*bounds) {
            auto t = try_tree(read_graph(in));
            if (!t) throw GraphError("bounds needs a tree");
            auto report = evaluate_bounds(*t, k);
            if (as_json) {
                std::cout << to_json(report).dump(2) << '\n';
                return kExitOk;
            }
            std::cout << "n " << report.n << "  l " << report.leaves << "  s " << report.supports << "  k " << report.k
                      << "  iota " << report.iota << '\n';
            for (const auto& e : report.bounds) {
                std::cout << "  " << to_string(e.kind) << ' ';
                if (e.applicable) std::cout << to_string(e.value) << (e.equality ? "  equality" : "");
                else std::cout << "N/A: " << e.reason;
                if (!e.note.empty()) std::cout << "  (" << e.note << ')';
                std::cout << '\n';
            }
            std::cout << "regime " << regime_label(report.regime, k);
            if (!report.regime_applicable) std::cout << "  N/A: " << report.regime_reason;
            std::cout << '\n';
            return kExitOk;
        }
        if (*verify) {
            Graph g = read_graph(in);
            VertexSet set = parse_vertex_list(set_text);
            for (Vertex v : set)
                if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
            const bool ok = is_isolating(g, set, k);
            std::cout << (ok ? "true" : "false") << '\n';
            std::cout << "residual_max_degree " << residual_max_degree(g, set) << '\n';
            if (auto w = isolation_witness(g, set, k)) std::cout << "witness " << *w << '\n';
            return ok ? kExitOk : kExitViolation;
        }
        if (*recognize) {
            Graph g = read_graph(in);
            nlohmann::json out;
            if (family == "corona-char") {
                auto cert = recognize_char_orderminusleaves(g, k);
                out["member"] = cert.has_value();
                if (cert) out["certificate"] = to_json(*cert);
            } else {
                auto t = try_tree(g);
                if (!t) throw GraphError("recognize --family " + family + " needs a tree");
                if (family == "F") {
                    auto cert = recognize_F(*t);
                    out["member"] = cert.has_value();
                    if (cert) out["certificate"] = to_json(*cert);
                } else {
                    auto cert = recognize_Tk(*t, k);
                    out["member"] = cert.has_value();
                    if (cert) out["certificate"] = to_json(*cert);
                }
            }
            std::cout << out.dump() << '\n';
            return kExitOk;
        }
        if (*generate) {
            if (family == "F") {
                auto inst = gen_seed ? random_family_F(r, s, *gen_seed) : gen_family_F(r, s);
                print_generated(inst.tree.graph(), to_json(inst.cert));
            } else if (family == "Tk") {
                TkWiring w = random_Tk_wiring(k, n0, h, gen_seed.value_or(0));
                auto inst = gen_family_Tk(k, w);
                print_generated(inst.tree.graph(), to_json(inst.cert));
            } else if (family == "corona-extremal") {
                Tree t = gen_corona_extremal(k, r, n == 0 ? (k + 2) * r : n);
                print_generated(t.graph(), {{"family", "corona-extremal"}, {"k", k}, {"r", r}});
            } else if (family == "c4") {
                std::array<int, 4> counts{k, k, k, k};
                if (!leaves_text.empty()) {
                    auto v = parse_int_list(leaves_text);
                    if (v.size() != 4) throw FamilyError("--leaves needs four counts");
                    std::copy(v.begin(), v.end(), counts.begin());
                }
                auto [g, cert] = gen_char_c4(k, counts);
                print_generated(g, to_json(cert));
            } else if (family == "corona-char") {
                std::vector<Edge> path;
                for (int i = 0; i + 1 < m; ++i) path.push_back({i, i + 1});
                auto [g, cert] = gen_char_corona(k, build_graph(m, path), std::vector<int>(m, k), std::vector<int>(m, 0));
                print_generated(g, to_json(cert));
            } else if (family == "spider") {
                Tree t = gen_spider_gap(k);
                print_generated(t.graph(), {{"family", "spider"}, {"k", k}, {"gap", k}});
            } else {
                auto inst = gen_seed ? random_family_F(r, s, *gen_seed) : gen_family_F(r, s);
                std::map<Vertex, int> add;
                for (Vertex b : inst.cert.B) add[b] = extra;
                Tree t = add_twin_leaves(inst.tree, inst.cert, add);
                print_generated(t.graph(), {{"family", "twin"}, {"base", to_json(inst.cert)}, {"extra", extra}});
            }
            return kExitOk;
        }
        if (*sweep) {
            cfg.k_list = parse_int_list(k_list);
            cfg.checks = parse_checks(checks);
            auto result = run_sweep(cfg);
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw Error("cannot write " + out_path);
            }
            std::ostream& out = out_path.empty() ? std::cout : file;
            for (const auto& rec : result.records) out << to_json(rec).dump() << '\n';
            std::cerr << result.records.size() << " trees, " << result.violation_count << " violations\n";
            for (const auto& rec : result.records)
                for (const auto& v : rec.violations)
                    std::cerr << "violation [" << v.check << ", k=" << v.k << "] " << rec.tree_code << ": " << v.message
                              << '\n';
            return result.violation_count == 0 ? kExitOk : kExitViolation;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
