#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cfon/errors.hpp"
#include "cfon/rng.hpp"

namespace cfon {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted
// ascending, symmetric, self-loop and duplicate free. Immutable once
// built; every operation in this header is pure.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    long long edge_count() const {
        long long total = 0;
        for (const auto& nbrs : adj) total += static_cast<long long>(nbrs.size());
        return total / 2;
    }

    bool operator==(const Graph&) const = default;
};

struct GraphStats {
    int max_degree = 0;
    bool has_isolated = false;
    long long edges = 0;
};

inline GraphStats graph_stats(const Graph& g) {
    GraphStats st;
    for (int v = 0; v < g.n; ++v) {
        st.max_degree = std::max(st.max_degree, g.degree(v));
        if (g.adj[v].empty()) st.has_isolated = true;
        st.edges += g.degree(v);
    }
    st.edges /= 2;
    return st;
}

// Builds a graph from an explicit 0-based edge list, enforcing the type
// invariants; rejects self-loops, duplicates and out-of-range endpoints.
inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw parse_error("vertex count must be non-negative");
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
        std::pair<int, int> key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw parse_error("duplicate edge (" + std::to_string(key.first) + "," +
                              std::to_string(key.second) + ")");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

// Edge-list text format: optional 'c' comment lines, one 'p cfon <n> <m>'
// header, and m lines 'e <u> <v>' with 1-based endpoints. Edge order is
// irrelevant; self-loops, duplicates (in either direction) and
// out-of-range endpoints are rejected.
inline Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    struct PendingEdge {
        long long u, v;
        int line;
    };
    std::vector<PendingEdge> pending;
    std::set<std::pair<long long, long long>> seen;

    auto fail = [&](int at, const std::string& msg) -> void {
        throw parse_error("line " + std::to_string(at) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag.empty()) continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "cfon" || n < 0 || m < 0)
                fail(line_no, "malformed header, expected 'p cfon <n> <m>'");
            if (have_header) fail(line_no, "duplicate header");
            std::string rest;
            if (ls >> rest) fail(line_no, "trailing tokens after header");
            have_header = true;
        } else if (tag == "e") {
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) fail(line_no, "malformed edge, expected 'e <u> <v>'");
            std::string rest;
            if (ls >> rest) fail(line_no, "trailing tokens after edge");
            if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
            if (u < 1 || v < 1) fail(line_no, "vertex ids are 1-based and positive");
            std::pair<long long, long long> key = std::minmax(u, v);
            if (!seen.insert(key).second)
                fail(line_no, "duplicate edge (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")");
            pending.push_back({u, v, line_no});
        } else {
            fail(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header) throw parse_error("missing 'p cfon <n> <m>' header");
    if (static_cast<long long>(pending.size()) != m)
        throw parse_error("header declares m=" + std::to_string(m) + " but " +
                          std::to_string(pending.size()) + " edges were given");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(pending.size());
    for (const PendingEdge& e : pending) {
        if (e.u > n || e.v > n)
            fail(e.line, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") out of range for n=" + std::to_string(n));
        edges.push_back({static_cast<int>(e.u - 1), static_cast<int>(e.v - 1)});
    }
    return graph_from_edges(static_cast<int>(n), edges);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

// Canonical writer: header, then edges 'e u v' with u < v in lexicographic
// order, 1-based, LF newlines. parse_graph(write_graph(g)) == g.
inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p cfon " << g.n << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (v > u) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

// --- family generators -----------------------------------------------

inline Graph complete_graph(int n) {
    if (n < 1) throw parse_error("complete: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return graph_from_edges(n, e);
}

inline Graph path_graph(int n) {
    if (n < 1) throw parse_error("path: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return graph_from_edges(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw parse_error("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    e.push_back({0, n - 1});
    return graph_from_edges(n, e);
}

// Star S_k = K_{1,k}: hub 0, leaves 1..k.
inline Graph star_graph(int k) {
    if (k < 1) throw parse_error("star: k must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= k; ++v) e.push_back({0, v});
    return graph_from_edges(k + 1, e);
}

// K_n with every edge replaced by a 2-edge path through a fresh vertex.
// Branch vertices 0..n-1; subdivision vertices follow in lexicographic
// order of the clique edge they split.
inline Graph subdivided_clique(int n) {
    if (n < 2) throw parse_error("subdivided-clique: n must be >= 2");
    int next = n;
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            e.push_back({u, next});
            e.push_back({v, next});
            ++next;
        }
    return graph_from_edges(next, e);
}

// G(n, p): one splitmix64 unit draw per vertex pair in lexicographic
// order, so a seed pins the graph bit-exactly.
inline Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw parse_error("gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw parse_error("gnp: p must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) e.push_back({u, v});
    return graph_from_edges(n, e);
}

// --- line graph --------------------------------------------------------

struct LineGraphResult {
    Graph graph;
    // L-vertex -> original edge (u < v); index order is the lexicographic
    // order of the original edges.
    std::vector<std::pair<int, int>> edge_of_vertex;
};

inline LineGraphResult line_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (v > u) edges.push_back({u, v});
    if (edges.empty()) throw precondition_error("line_graph: graph has no edges");
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.n));
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        incident[edges[i].first].push_back(i);
        incident[edges[i].second].push_back(i);
    }
    // two distinct edges of a simple graph share at most one endpoint, so
    // every adjacent pair is generated exactly once
    std::vector<std::pair<int, int>> le;
    for (const auto& ids : incident)
        for (std::size_t a = 0; a + 1 < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                le.push_back({ids[a], ids[b]});
    LineGraphResult out;
    out.graph = graph_from_edges(static_cast<int>(edges.size()), le);
    out.edge_of_vertex = std::move(edges);
    return out;
}

inline Graph gen_family(const std::string& name, const std::vector<double>& params,
                        std::uint64_t seed = 0) {
    std::string tag = name;
    std::replace(tag.begin(), tag.end(), '_', '-');
    auto expect = [&](std::size_t count) {
        if (params.size() != count)
            throw parse_error("family '" + tag + "': expected " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    auto int_param = [&](std::size_t i) -> int {
        double x = params[i];
        if (x != std::floor(x) || x < -1e9 || x > 1e9)
            throw parse_error("family '" + tag + "': parameter " + std::to_string(i + 1) +
                              " must be an integer");
        return static_cast<int>(x);
    };
    if (tag == "complete") {
        expect(1);
        return complete_graph(int_param(0));
    }
    if (tag == "path") {
        expect(1);
        return path_graph(int_param(0));
    }
    if (tag == "cycle") {
        expect(1);
        return cycle_graph(int_param(0));
    }
    if (tag == "star") {
        expect(1);
        return star_graph(int_param(0));
    }
    if (tag == "subdivided-clique") {
        expect(1);
        return subdivided_clique(int_param(0));
    }
    if (tag == "gnp") {
        expect(2);
        return gnp_graph(int_param(0), params[1], seed);
    }
    if (tag == "line-complete") {
        expect(1);
        int m = int_param(0);
        if (m < 2) throw parse_error("line-complete: m must be >= 2");
        return line_graph(complete_graph(m)).graph;
    }
    throw parse_error("unknown family '" + name + "'");
}

// --- induced stars -----------------------------------------------------

// An induced S_k: `center` adjacent to all `leaves`, leaves pairwise
// non-adjacent, |leaves| = k.
struct StarWitness {
    int center = -1;
    std::vector<int> leaves;
};

namespace detail {

// Extends `pick` to the lexicographically first independent k-subset of
// the sorted candidate list; worst case exponential in k.
inline bool independent_extend(const Graph& g, const std::vector<int>& cand,
                               std::size_t from, int k, std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) == k) return true;
    for (std::size_t i = from; i < cand.size(); ++i) {
        int v = cand[i];
        bool independent = true;
        for (int u : pick)
            if (g.has_edge(u, v)) {
                independent = false;
                break;
            }
        if (!independent) continue;
        pick.push_back(v);
        if (independent_extend(g, cand, i + 1, k, pick)) return true;
        pick.pop_back();
    }
    return false;
}

}  // namespace detail

// Searches each open neighborhood for an independent set of size k.
// Returns the lexicographically least witness (by center, then leaf set),
// or nullopt when the graph is S_k-free.
inline std::optional<StarWitness> find_induced_star(const Graph& g, int k) {
    if (k < 2) throw precondition_error("find_induced_star: k must be >= 2");
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) < k) continue;
        std::vector<int> pick;
        pick.reserve(static_cast<std::size_t>(k));
        if (detail::independent_extend(g, g.adj[v], 0, k, pick))
            return StarWitness{v, std::move(pick)};
    }
    return std::nullopt;
}

inline bool is_sk_free(const Graph& g, int k) { return !find_induced_star(g, k).has_value(); }

}  // namespace cfon
