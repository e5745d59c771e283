// Command-line front end: graph generation, conflict-free coloring,
// verification, exact chromatic search, star-freeness checks, the
// line-of-clique lower bound, and benchmark sweeps.
//
// Exit codes: 0 ok, 1 verification failure or lower-bound counterexample,
// 2 usage or parse error, 3 precondition violation (isolated vertex,
// instance beyond supported scale), 4 internal invariant breach.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cfon/errors.hpp"
#include "cfon/exact.hpp"
#include "cfon/graph.hpp"
#include "cfon/greedy.hpp"
#include "cfon/hypergraph.hpp"
#include "cfon/lower_bounds.hpp"
#include "cfon/mathutil.hpp"
#include "cfon/pipeline.hpp"
#include "cfon/random_color.hpp"
#include "cfon/trace_json.hpp"

namespace {

using namespace cfon;

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open output file '" + path + "'");
    out << text;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

// isolated vertices removed, survivors renumbered densely preserving order
Graph strip_isolated(const Graph& g, std::vector<int>* kept = nullptr) {
    std::vector<int> remap(static_cast<std::size_t>(g.n), -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v)
        if (!g.adj[v].empty()) {
            remap[v] = next++;
            if (kept) kept->push_back(v);
        }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (v > u) edges.push_back({remap[u], remap[v]});
    return graph_from_edges(next, edges);
}

struct BenchInstance {
    std::string family;
    std::vector<double> params;
    int k = 3;
    std::uint64_t seed = 0;
};

// Suite config: one instance per non-comment line,
//   <family> <params...> [k=<k>] [seed=<seed>]
std::vector<BenchInstance> parse_bench_config(std::istream& in) {
    std::vector<BenchInstance> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        BenchInstance inst;
        if (!(ls >> inst.family)) continue;
        std::string token;
        while (ls >> token) {
            if (token.rfind("k=", 0) == 0)
                inst.k = std::stoi(token.substr(2));
            else if (token.rfind("seed=", 0) == 0)
                inst.seed = std::stoull(token.substr(5));
            else {
                try {
                    inst.params.push_back(std::stod(token));
                } catch (const std::exception&) {
                    throw parse_error("bench config line " + std::to_string(line_no) +
                                      ": bad token '" + token + "'");
                }
            }
        }
        out.push_back(std::move(inst));
    }
    return out;
}

std::string format_product_space(double value) {
    std::ostringstream os;
    if (value < 9.0e15)
        os << static_cast<long long>(value + 0.5);
    else
        os << value;
    return os.str();
}

int cmd_gen(const std::string& family, const std::vector<double>& params,
            std::uint64_t seed, const std::string& out_path) {
    Graph g = gen_family(family, params, seed);
    emit(out_path, write_graph(g));
    return 0;
}

int cmd_color(const std::string& in_path, int k, const std::string& algo,
              std::uint64_t seed, std::optional<int> max_colors,
              const std::string& out_path, const std::string& trace_path,
              bool strip, const std::string& stripped_path, bool assert_free) {
    Graph g = load_graph(in_path);
    if (strip) {
        g = strip_isolated(g);
        if (!stripped_path.empty()) emit(stripped_path, write_graph(g));
    }
    if (g.n == 0) throw parse_error("graph has no vertices");
    GraphStats gs = graph_stats(g);
    if (gs.has_isolated)
        throw precondition_error(
            "graph has an isolated vertex; rerun with --strip-isolated to drop it");

    Coloring coloring;
    nlohmann::json trace;
    if (algo == "pipeline") {
        PipelineOptions opt;
        opt.k = k;
        opt.random.seed = seed;
        opt.check_sk_free = assert_free;
        PipelineResult res = cfon_color_skfree(g, opt);
        coloring = std::move(res.coloring);
        trace = trace_to_json(res.trace);
        trace["algo"] = "pipeline";
    } else if (algo == "greedy") {
        std::vector<int> all(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) all[v] = v;
        Hypergraph h = build_nbr_hypergraph(g, all, all);
        HypergraphStats st = hypergraph_stats(h);
        coloring = cf_color_bounded_degree(h);
        trace = nlohmann::json{{"schema", 1},
                               {"algo", "greedy"},
                               {"d_max", st.d_max},
                               {"palette_size", st.d_max + 1},
                               {"colors_used", distinct_colors(coloring, h.universe)}};
    } else if (algo == "random") {
        std::vector<int> all(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) all[v] = v;
        Hypergraph h = build_nbr_hypergraph(g, all, all);
        RandomParams rp = choose_parameters(h);
        RandomColorConfig cfg;
        cfg.seed = seed;
        RandomColoring rc = cf_color_random(h, rp.t, rp.gamma, cfg);
        coloring = std::move(rc.coloring);
        trace = run_stats_to_json(rc.stats);
        trace["schema"] = 1;
        trace["algo"] = "random";
        trace["seed"] = seed;
        trace["t"] = rp.t;
        trace["gamma"] = rp.gamma;
    } else if (algo == "exact") {
        ChiResult res = chi_on_exact(g, max_colors);
        if (!res.chi) {
            std::cout << "no CFON coloring with at most " << *max_colors << " colors\n";
            return 1;
        }
        coloring = std::move(res.witness);
        trace = nlohmann::json{{"schema", 1}, {"algo", "exact"}, {"chi", *res.chi}};
    } else {
        throw parse_error("unknown algorithm '" + algo + "'");
    }
    trace["n"] = g.n;
    trace["m"] = g.edge_count();
    trace["delta"] = gs.max_degree;

    // no unvalidated output can escape
    if (find_cfon_violation(g, coloring)) {
        std::cerr << "internal error: produced coloring failed verification\n";
        return 4;
    }
    std::ostringstream body;
    write_coloring(body, coloring);
    emit(out_path, body.str());
    if (!trace_path.empty()) write_text_file(trace_path, trace.dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    Graph g = load_graph(graph_path);
    std::ifstream in(coloring_path);
    if (!in) throw parse_error("cannot open coloring file '" + coloring_path + "'");
    Coloring c = read_coloring(in, g.n);
    if (auto v = find_cfon_violation(g, c)) {
        std::cout << "violation: vertex " << *v + 1
                  << " has no uniquely colored neighbor\n";
        return 1;
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_chi(const std::string& graph_path, std::optional<int> max_colors,
            const std::string& witness_path) {
    Graph g = load_graph(graph_path);
    ChiResult res = chi_on_exact(g, max_colors);
    if (!res.chi) {
        std::cout << "no CFON coloring with at most " << *max_colors << " colors\n";
        return 0;
    }
    std::cout << *res.chi << "\n";
    if (!witness_path.empty()) {
        std::ostringstream body;
        write_coloring(body, res.witness);
        write_text_file(witness_path, body.str());
    }
    return 0;
}

int cmd_check_free(const std::string& graph_path, int k) {
    Graph g = load_graph(graph_path);
    if (auto star = find_induced_star(g, k)) {
        std::cout << "contains S_" << k << ": center " << star->center + 1 << ", leaves";
        for (int leaf : star->leaves) std::cout << ' ' << leaf + 1;
        std::cout << "\n";
        return 1;
    }
    std::cout << "S_" << k << "-free\n";
    return 0;
}

int cmd_lb_line_clique(int m, const std::string& coloring_path) {
    if (coloring_path.empty()) {
        std::cout << lower_bound_line_clique(m) << "\n";
        return 0;
    }
    const long long edges = static_cast<long long>(m) * (m - 1) / 2;
    std::ifstream in(coloring_path);
    if (!in) throw parse_error("cannot open coloring file '" + coloring_path + "'");
    EdgeColoring coloring = read_coloring(in, static_cast<int>(edges));
    LineCliqueCheck chk = check_line_clique_lb(m, coloring);
    if (chk.certified) {
        std::cout << "certificate: " << chk.colors_used << " colors >= bound "
                  << chk.bound << "\n";
        return 0;
    }
    std::cout << "counterexample: clique edge {" << chk.counterexample->first + 1 << ","
              << chk.counterexample->second + 1 << "} sees no unique color\n";
    return 1;
}

int cmd_bench(const std::string& config_path, const std::string& out_path) {
    std::ifstream in(config_path);
    if (!in) throw parse_error("cannot open bench config '" + config_path + "'");
    std::vector<BenchInstance> suite = parse_bench_config(in);
    std::ostringstream csv;
    csv << "family,n,m,delta,k,r,product_space,distinct_final,resamples,millis\n";
    for (const BenchInstance& inst : suite) {
        Graph g = gen_family(inst.family, inst.params, inst.seed);
        PipelineOptions opt;
        opt.k = inst.k;
        opt.random.seed = inst.seed;
        const auto t0 = std::chrono::steady_clock::now();
        PipelineResult res = cfon_color_skfree(g, opt);
        const auto t1 = std::chrono::steady_clock::now();
        const long long millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        std::uint64_t resamples = 0;
        for (const PeelRound& round : res.trace.rounds) resamples += round.resamples;
        csv << inst.family << ',' << g.n << ',' << g.edge_count() << ','
            << res.trace.delta << ',' << inst.k << ',' << res.trace.r << ','
            << format_product_space(res.trace.product_space) << ','
            << res.trace.distinct_final << ',' << resamples << ',' << millis << '\n';
    }
    emit(out_path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conflict-free coloring of open neighborhoods"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
    std::string gen_family_name;
    std::vector<double> gen_params;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("family", gen_family_name,
                    "complete|path|cycle|star|subdivided-clique|gnp|line-complete")
        ->required();
    gen->add_option("params", gen_params, "family parameters")->expected(-1);
    gen->add_option("--seed", gen_seed, "seed for random families");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // color
    auto* color = app.add_subcommand("color", "compute a CFON coloring");
    std::string color_in, color_algo = "pipeline", color_out, color_trace;
    std::string color_stripped;
    int color_k = 3;
    std::uint64_t color_seed = 0;
    int color_max = 0;
    bool color_strip = false, color_assert_free = false;
    color->add_option("graph", color_in, "input graph file")->required();
    color->add_option("--k", color_k, "star-freeness parameter k (default 3)");
    color->add_option("--algo", color_algo, "pipeline|greedy|random|exact")
        ->check(CLI::IsMember({"pipeline", "greedy", "random", "exact"}));
    color->add_option("--seed", color_seed, "seed for randomized algorithms");
    color->add_option("--max", color_max, "color cap for --algo exact");
    color->add_option("-o,--out", color_out, "coloring output file (default stdout)");
    color->add_option("--trace", color_trace, "write a JSON trace");
    color->add_flag("--strip-isolated", color_strip, "drop isolated vertices first");
    color->add_option("--write-stripped", color_stripped,
                      "with --strip-isolated, write the stripped graph here");
    color->add_flag("--assert-free", color_assert_free,
                    "reject graphs containing an induced S_k");

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
    std::string verify_graph, verify_coloring;
    verify->add_option("graph", verify_graph)->required();
    verify->add_option("coloring", verify_coloring)->required();

    // chi
    auto* chi = app.add_subcommand("chi", "exact minimum CFON color count");
    std::string chi_graph, chi_witness;
    int chi_max = 0;
    chi->add_option("graph", chi_graph)->required();
    chi->add_option("--max", chi_max, "search only up to this many colors");
    chi->add_option("--witness", chi_witness, "write the optimal coloring here");

    // check-free
    auto* free_cmd = app.add_subcommand("check-free", "test S_k-freeness");
    std::string free_graph;
    int free_k = 3;
    free_cmd->add_option("graph", free_graph)->required();
    free_cmd->add_option("k", free_k)->required()->check(CLI::Range(2, 1000));

    // lb-line-clique
    auto* lb = app.add_subcommand("lb-line-clique",
                                  "signature lower bound for line graphs of cliques");
    int lb_m = 0;
    std::string lb_coloring;
    lb->add_option("m", lb_m, "clique order")->required()->check(CLI::Range(3, 100000));
    lb->add_option("coloring", lb_coloring,
                   "optional coloring file of the line graph's vertices");

    // bench
    auto* bench = app.add_subcommand("bench", "run a pipeline sweep, write CSV");
    std::string bench_config, bench_out;
    bench->add_option("config", bench_config, "suite config file")->required();
    bench->add_option("out", bench_out, "output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_family_name, gen_params, gen_seed, gen_out);
        if (color->parsed()) {
            std::optional<int> max_colors;
            if (color_max > 0) max_colors = color_max;
            if (color_algo == "exact" && color_max == 0) max_colors = std::nullopt;
            return cmd_color(color_in, color_k, color_algo, color_seed, max_colors,
                             color_out, color_trace, color_strip, color_stripped,
                             color_assert_free);
        }
        if (verify->parsed()) return cmd_verify(verify_graph, verify_coloring);
        if (chi->parsed()) {
            std::optional<int> max_colors;
            if (chi_max > 0) max_colors = chi_max;
            return cmd_chi(chi_graph, max_colors, chi_witness);
        }
        if (free_cmd->parsed()) return cmd_check_free(free_graph, free_k);
        if (lb->parsed()) return cmd_lb_line_clique(lb_m, lb_coloring);
        if (bench->parsed()) return cmd_bench(bench_config, bench_out);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
