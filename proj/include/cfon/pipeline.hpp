#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cfon/errors.hpp"
#include "cfon/exact.hpp"
#include "cfon/graph.hpp"
#include "cfon/greedy.hpp"
#include "cfon/hypergraph.hpp"
#include "cfon/mathutil.hpp"
#include "cfon/random_color.hpp"

namespace cfon {

// Iterated peeling. Round i strips U_i, the surviving vertices whose
// induced degree exceeds log2 of the current induced maximum degree,
// conflict-free colors the hypergraph of their neighborhoods inside the
// surviving set, and repeats until the survivors induce an edgeless
// subgraph. A finishing layer then serves the final independent set, and
// the per-layer colors combine by tuple identity: a color unique inside
// any one layer stays unique in the combined coloring because blank
// layers read 0.

struct PeelRound {
    std::vector<int> v_prev;  // survivors entering the round
    std::vector<int> u;       // vertices peeled this round
    int delta_induced = 0;
    double threshold = 0.0;  // log2(delta_induced), 0 when delta <= 1

    // filled in when the round is colored
    std::string algo;  // "greedy" or "random"
    int d_max = 0;
    long long gamma = 0;
    int s_min = 0, s_max = 0;
    int t = 0;                     // 0 for greedy rounds
    double t_analytic = 0.0;       // log2(delta_induced)/2 + 1
    long long gamma_analytic = 0;  // delta_induced^2
    long long palette_size = 0;
    int colors_used = 0;
    std::uint64_t resamples = 0;
    int escalations = 0;
};

struct PeelTrace {
    std::vector<PeelRound> rounds;
    int r = 0;
    std::vector<int> final_independent;  // V_r, may be empty
    int finish_d_max = 0;
    int finish_palette = 0;  // 0 when the finishing layer is skipped
    int finish_colors_used = 0;
    int k = 0;
    int delta = 0;
    int log_star_delta = 0;
    std::uint64_t seed = 0;
    double product_space = 0.0;  // k-or-1 times the product of palette sizes
    int distinct_final = 0;
};

// Partition skeleton only: rounds' V/U sets, induced degrees and
// thresholds. Stops at the first survivor set inducing no edge.
inline PeelTrace peel_partition(const Graph& g) {
    if (g.n == 0) throw precondition_error("peel_partition: empty graph");
    GraphStats gs = graph_stats(g);
    if (gs.has_isolated)
        throw precondition_error("peel_partition: graph has an isolated vertex");
    PeelTrace tr;
    tr.delta = gs.max_degree;
    tr.log_star_delta = log_star2(static_cast<double>(gs.max_degree));

    std::vector<char> alive(static_cast<std::size_t>(g.n), 1);
    std::vector<int> alive_list(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) alive_list[v] = v;
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);

    while (true) {
        int delta_i = 0;
        for (int v : alive_list) {
            int d = 0;
            for (int w : g.adj[v]) d += alive[w];
            deg[v] = d;
            delta_i = std::max(delta_i, d);
        }
        if (delta_i == 0) {
            tr.final_independent = alive_list;
            break;
        }
        PeelRound round;
        round.v_prev = alive_list;
        round.delta_induced = delta_i;
        round.threshold = delta_i <= 1 ? 0.0 : std::log2(static_cast<double>(delta_i));
        std::vector<int> next;
        for (int v : alive_list)
            (static_cast<double>(deg[v]) > round.threshold ? round.u : next).push_back(v);
        // a vertex of degree delta_i always exceeds log2(delta_i)
        if (round.u.empty()) throw internal_error("peel round selected no vertices");
        for (int v : round.u) alive[v] = 0;
        alive_list = std::move(next);
        tr.rounds.push_back(std::move(round));
    }
    tr.r = static_cast<int>(tr.rounds.size());
    return tr;
}

// Final color = dense id of the per-layer color tuple, numbered 1..N in
// order of first appearance by vertex id.
inline Coloring product_compact(const std::vector<Coloring>& layers, int n) {
    for (const Coloring& layer : layers)
        if (static_cast<int>(layer.size()) < n)
            throw precondition_error("product_compact: layer does not cover all vertices");
    Coloring out(static_cast<std::size_t>(n), 0);
    std::map<std::vector<int>, int> dense;
    std::vector<int> tuple(layers.size());
    int next = 1;
    for (int v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < layers.size(); ++i) tuple[i] = layers[i][v];
        auto [it, inserted] = dense.try_emplace(tuple, next);
        if (inserted) ++next;
        out[v] = it->second;
    }
    return out;
}

struct PipelineOptions {
    int k = 3;
    RandomColorConfig random;
    // reject inputs containing an induced S_k before coloring
    bool check_sk_free = false;
    // rounds with d_max at or below this use the deterministic colorer,
    // whose d_max+1 palette beats the randomized one on small instances
    int small_degree_cutoff = 16;
};

struct PipelineResult {
    Coloring coloring;
    PeelTrace trace;
    std::vector<Coloring> layers;  // rounds 1..r, then the finishing layer
};

inline PipelineResult cfon_color_skfree(const Graph& g, const PipelineOptions& opt = {}) {
    if (opt.k < 1) throw precondition_error("cfon_color_skfree: k must be >= 1");
    if (opt.check_sk_free) {
        if (auto star = find_induced_star(g, opt.k))
            throw precondition_error("graph contains an induced S_" + std::to_string(opt.k) +
                                     " centered at vertex " + std::to_string(star->center));
    }
    PipelineResult res;
    res.trace = peel_partition(g);
    PeelTrace& tr = res.trace;
    tr.k = opt.k;
    tr.seed = opt.random.seed;

    double product = 1.0;
    std::vector<char> in_base(static_cast<std::size_t>(g.n), 0);
    std::vector<int> scratch;
    for (std::size_t i = 0; i < tr.rounds.size(); ++i) {
        PeelRound& round = tr.rounds[i];
        Hypergraph h = build_nbr_hypergraph(g, round.v_prev, round.u);
        HypergraphStats st = hypergraph_stats(h);
        round.d_max = st.d_max;
        round.gamma = st.gamma;
        round.s_min = st.s_min;
        round.s_max = st.s_max;
        round.t_analytic = std::log2(static_cast<double>(round.delta_induced)) / 2.0 + 1.0;
        round.gamma_analytic =
            static_cast<long long>(round.delta_induced) * round.delta_induced;

        Coloring layer;
        if (st.d_max <= opt.small_degree_cutoff || st.s_min < 3) {
            layer = cf_color_bounded_degree(h);
            round.algo = "greedy";
            round.palette_size = st.d_max + 1;
        } else {
            RandomColorConfig cfg = opt.random;
            cfg.seed = derive_seed(opt.random.seed, i + 1);
            const int t = std::max(1, (st.s_min + 1) / 2);
            RandomColoring rc = cf_color_random(h, t, st.gamma, cfg);
            layer = std::move(rc.coloring);
            round.algo = "random";
            round.t = t;
            round.palette_size = rc.stats.palette_bound;
            round.resamples = rc.stats.resamples;
            round.escalations = rc.stats.escalations;
        }
        layer.resize(static_cast<std::size_t>(g.n), 0);
        round.colors_used = distinct_colors(layer, h.universe);

        // every peeled vertex must see a unique layer color inside the
        // round universe
        for (int v : round.v_prev) in_base[v] = 1;
        for (int v : round.u) {
            scratch.clear();
            for (int w : g.adj[v])
                if (in_base[w]) scratch.push_back(layer[w]);
            if (!detail::has_unique_value(scratch))
                throw internal_error("round " + std::to_string(i + 1) + " left vertex " +
                                     std::to_string(v) + " unsatisfied");
        }
        for (int v : round.v_prev) in_base[v] = 0;

        product *= static_cast<double>(round.palette_size);
        res.layers.push_back(std::move(layer));
    }

    if (!tr.final_independent.empty()) {
        Lemma3Coloring fin = lemma3_color(g, tr.final_independent);
        tr.finish_d_max = fin.hyper_d_max;
        tr.finish_palette = fin.palette_size;
        tr.finish_colors_used = fin.colors_used;
        Coloring layer = std::move(fin.coloring);
        layer.resize(static_cast<std::size_t>(g.n), 0);
        res.layers.push_back(std::move(layer));
        product *= static_cast<double>(opt.k);
    }

    tr.product_space = product;
    res.coloring = product_compact(res.layers, g.n);
    tr.distinct_final =
        res.coloring.empty() ? 0 : *std::max_element(res.coloring.begin(), res.coloring.end());
    if (find_cfon_violation(g, res.coloring))
        throw internal_error("pipeline produced an invalid coloring");
    return res;
}

}  // namespace cfon
