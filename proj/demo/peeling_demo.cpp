// End-to-end tour: build a claw-free graph, color it with the peeling
// pipeline, verify, and print the trace.

#include <iostream>

#include "cfon/exact.hpp"
#include "cfon/graph.hpp"
#include "cfon/pipeline.hpp"
#include "cfon/trace_json.hpp"

int main() {
    using namespace cfon;

    Graph g = line_graph(complete_graph(8)).graph;
    std::cout << "L(K_8): " << g.n << " vertices, " << g.edge_count() << " edges, delta "
              << graph_stats(g).max_degree << "\n";

    PipelineOptions opt;
    opt.k = 3;  // line graphs are claw-free
    opt.random.seed = 2024;
    PipelineResult res = cfon_color_skfree(g, opt);

    std::cout << "valid: " << (cfon_valid(g, res.coloring) ? "yes" : "no") << "\n";
    std::cout << "colors used: " << res.trace.distinct_final << " (product space "
              << res.trace.product_space << ")\n";
    std::cout << trace_to_json(res.trace).dump(2) << "\n";

    Graph p4 = path_graph(4);
    ChiResult chi = chi_on_exact(p4);
    std::cout << "exact chi of P_4: " << *chi.chi << "\n";
    return 0;
}
