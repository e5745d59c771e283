#pragma once

// Shared generators and independent re-implementations used as oracles.
// The checkers here deliberately avoid the library's sort-based counting
// so that agreement between the two is meaningful.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cfon/graph.hpp"
#include "cfon/hypergraph.hpp"
#include "cfon/rng.hpp"

namespace test_util {

using cfon::Coloring;
using cfon::Graph;
using cfon::Hypergraph;
using cfon::SplitMix64;

inline Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});          // outer cycle
        e.push_back({i, i + 5});                // spokes
        e.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
    }
    return cfon::graph_from_edges(10, e);
}

// K_{2p} minus a perfect matching; claw-free for every p
inline Graph cocktail_party(int pairs) {
    std::vector<std::pair<int, int>> e;
    const int n = 2 * pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (v != u + pairs || u >= pairs) e.push_back({u, v});
    return cfon::graph_from_edges(n, e);
}

inline Graph gnp_no_isolated(int n, double p, SplitMix64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = cfon::gnp_graph(n, p, rng.next());
        if (!cfon::graph_stats(g).has_isolated) return g;
    }
    throw std::runtime_error("gnp_no_isolated: no usable sample");
}

// line graph of a G(n,p) sample; retries until the line graph exists and
// has no isolated vertex (no component of the base graph is a lone edge)
inline Graph random_line_graph(int n, double p, SplitMix64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = cfon::gnp_graph(n, p, rng.next());
        if (g.edge_count() == 0) continue;
        Graph lg = cfon::line_graph(g).graph;
        if (!cfon::graph_stats(lg).has_isolated) return lg;
    }
    throw std::runtime_error("random_line_graph: no usable sample");
}

// random hypergraph with per-vertex degree capped by max_degree
inline Hypergraph random_bounded_degree_hypergraph(SplitMix64& rng, int max_universe,
                                                   int max_edges, int max_degree) {
    const int nu = 2 + static_cast<int>(rng.next_below(max_universe - 1));
    const int ne = 1 + static_cast<int>(rng.next_below(max_edges));
    std::vector<int> capacity(nu, max_degree);
    std::vector<std::vector<int>> members;
    for (int e = 0; e < ne; ++e) {
        const int want = 1 + static_cast<int>(rng.next_below(std::min(nu, 6)));
        std::set<int> edge;
        for (int tries = 0; tries < 4 * want; ++tries) {
            const int v = static_cast<int>(rng.next_below(nu));
            if (capacity[v] > 0 && !edge.count(v)) {
                edge.insert(v);
                if (static_cast<int>(edge.size()) == want) break;
            }
        }
        if (edge.empty()) continue;
        for (int v : edge) --capacity[v];
        members.push_back(std::vector<int>(edge.begin(), edge.end()));
    }
    std::vector<int> universe(nu);
    for (int v = 0; v < nu; ++v) universe[v] = v;
    return cfon::make_hypergraph(universe, members);
}

// independent conflict-free check, map-based double counting
inline std::optional<int> naive_cf_violation(const Hypergraph& h, const Coloring& c) {
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        std::map<int, int> count;
        for (int v : h.edges[e].members) ++count[c[v]];
        bool unique = false;
        for (const auto& [color, times] : count)
            if (times == 1) unique = true;
        if (!unique) return e;
    }
    return std::nullopt;
}

inline std::optional<int> naive_cfon_violation(const Graph& g, const Coloring& c) {
    for (int v = 0; v < g.n; ++v) {
        std::map<int, int> count;
        for (int u : g.adj[v]) ++count[c[u]];
        bool unique = false;
        for (const auto& [color, times] : count)
            if (times == 1) unique = true;
        if (!unique) return v;
    }
    return std::nullopt;
}

// pairwise edge-intersection count, the O(E^2) second route for gamma
inline long long gamma_pairwise(const Hypergraph& h) {
    long long gamma = 0;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        long long touching = 0;
        for (std::size_t f = 0; f < h.edges.size(); ++f) {
            if (e == f) continue;
            const auto& a = h.edges[e].members;
            const auto& b = h.edges[f].members;
            bool meets = false;
            for (int v : a)
                if (std::binary_search(b.begin(), b.end(), v)) {
                    meets = true;
                    break;
                }
            if (meets) ++touching;
        }
        gamma = std::max(gamma, touching);
    }
    return gamma;
}

// exhaustive minimum CFON color count: iterate all colorings with c
// colors for c = 1, 2, ... and test the definition directly
inline int chi_brute(const Graph& g) {
    for (int c = 1; c <= g.n; ++c) {
        Coloring col(g.n, 1);
        while (true) {
            if (!naive_cfon_violation(g, col).has_value()) return c;
            int pos = 0;
            while (pos < g.n && col[pos] == c) col[pos++] = 1;
            if (pos == g.n) break;
            ++col[pos];
        }
    }
    throw std::runtime_error("chi_brute: no coloring found");
}

inline std::vector<int> greedy_maximal_independent_set(const Graph& g) {
    std::vector<char> blocked(g.n, 0);
    std::vector<int> mis;
    for (int v = 0; v < g.n; ++v) {
        if (blocked[v]) continue;
        mis.push_back(v);
        for (int u : g.adj[v]) blocked[u] = 1;
    }
    return mis;
}

inline Coloring random_coloring(SplitMix64& rng, int size, int max_color, bool allow_zero) {
    Coloring c(size);
    for (int v = 0; v < size; ++v) {
        const int lo = allow_zero ? 0 : 1;
        c[v] = lo + static_cast<int>(rng.next_below(max_color - lo + 1));
    }
    return c;
}

}  // namespace test_util
