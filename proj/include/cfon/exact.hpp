#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfon/errors.hpp"
#include "cfon/graph.hpp"
#include "cfon/hypergraph.hpp"

namespace cfon {

// Exact oracles at desk scale: open-neighborhood validity, the minimum
// color count by canonical backtracking, and an exact conflict-free
// feasibility test for hypergraphs. The chromatic search is practical to
// roughly 15 vertices; beyond that it is honest but slow.

// Least vertex with no uniquely colored neighbor, or nullopt. Undefined
// (and rejected) when a vertex has an empty neighborhood.
inline std::optional<int> find_cfon_violation(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.size()) < g.n)
        throw precondition_error("coloring does not cover all vertices");
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v].empty())
            throw precondition_error("vertex " + std::to_string(v) +
                                     " is isolated; its open neighborhood is empty");
    std::vector<int> scratch;
    for (int v = 0; v < g.n; ++v) {
        scratch.clear();
        for (int u : g.adj[v]) scratch.push_back(c[u]);
        if (!detail::has_unique_value(scratch)) return v;
    }
    return std::nullopt;
}

inline bool cfon_valid(const Graph& g, const Coloring& c) {
    return !find_cfon_violation(g, c).has_value();
}

namespace detail {

// min-degree removal order, reversed, ties broken by vertex id
inline std::vector<int> reverse_degeneracy_order(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n));
    std::vector<char> removed(static_cast<std::size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.n));
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        for (int u : g.adj[best])
            if (!removed[u]) --deg[u];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

// Backtracking CFON search with canonical color introduction (a vertex
// may use colors 1..min(cap, used+1)) and pruning on any vertex whose
// neighborhood became fully colored without a unique color.
class CfonSearch {
 public:
    CfonSearch(const Graph& g, int cap)
        : g_(g), cap_(cap), color_(static_cast<std::size_t>(g.n), 0),
          uncolored_(static_cast<std::size_t>(g.n)) {
        for (int v = 0; v < g.n; ++v) uncolored_[v] = g.degree(v);
        order_ = reverse_degeneracy_order(g);
    }

    bool run() { return dfs(0, 0); }
    const Coloring& colors() const { return color_; }

 private:
    bool neighborhood_satisfied(int v) {
        scratch_.clear();
        for (int u : g_.adj[v]) scratch_.push_back(color_[u]);
        return has_unique_value(scratch_);
    }

    bool dfs(std::size_t idx, int used) {
        if (idx == order_.size()) return true;
        const int v = order_[idx];
        for (int u : g_.adj[v]) --uncolored_[u];
        const int limit = std::min(cap_, used + 1);
        for (int col = 1; col <= limit; ++col) {
            color_[v] = col;
            bool ok = true;
            for (int u : g_.adj[v])
                if (uncolored_[u] == 0 && !neighborhood_satisfied(u)) {
                    ok = false;
                    break;
                }
            if (ok && dfs(idx + 1, std::max(used, col))) return true;
        }
        color_[v] = 0;
        for (int u : g_.adj[v]) ++uncolored_[u];
        return false;
    }

    const Graph& g_;
    int cap_;
    std::vector<int> order_;
    Coloring color_;
    std::vector<int> uncolored_;
    std::vector<int> scratch_;
};

}  // namespace detail

struct FeasibilityResult {
    bool feasible = false;
    Coloring witness;
};

inline FeasibilityResult cfon_feasible(const Graph& g, int colors) {
    if (colors < 1) throw precondition_error("cfon_feasible: colors must be >= 1");
    if (g.n == 0) throw precondition_error("cfon_feasible: empty graph");
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v].empty())
            throw precondition_error("cfon_feasible: vertex " + std::to_string(v) +
                                     " is isolated");
    detail::CfonSearch search(g, colors);
    if (search.run()) return {true, search.colors()};
    return {false, {}};
}

struct ChiResult {
    std::optional<int> chi;  // empty when infeasible within the given cap
    Coloring witness;
};

// Minimum CFON color count with witness. Without a cap the search is
// guaranteed to stop at max degree + 1.
inline ChiResult chi_on_exact(const Graph& g, std::optional<int> max_colors = std::nullopt) {
    const int cap = max_colors ? *max_colors : graph_stats(g).max_degree + 1;
    for (int c = 1; c <= cap; ++c) {
        FeasibilityResult r = cfon_feasible(g, c);
        if (r.feasible) return {c, std::move(r.witness)};
    }
    if (!max_colors)
        throw internal_error("no CFON coloring within max degree + 1 colors");
    return {std::nullopt, {}};
}

namespace detail {

class CfHypergraphSearch {
 public:
    CfHypergraphSearch(const Hypergraph& h, int cap, std::uint64_t node_budget)
        : h_(h), cap_(cap), budget_(node_budget) {
        const auto& uni = h.universe;
        const int nu = static_cast<int>(uni.size());
        inc_.assign(static_cast<std::size_t>(nu), {});
        auto upos = [&](int v) {
            return static_cast<int>(std::lower_bound(uni.begin(), uni.end(), v) - uni.begin());
        };
        for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
            uncolored_.push_back(static_cast<int>(h.edges[e].members.size()));
            for (int v : h.edges[e].members) inc_[upos(v)].push_back(e);
        }
        color_.assign(static_cast<std::size_t>(nu), 0);
        order_.resize(static_cast<std::size_t>(nu));
        for (int i = 0; i < nu; ++i) order_[i] = i;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (inc_[a].size() != inc_[b].size()) return inc_[a].size() > inc_[b].size();
            return a < b;
        });
    }

    bool run() { return dfs(0, 0); }

    Coloring witness() const {
        Coloring c(static_cast<std::size_t>(h_.max_vertex_id() + 1), 0);
        for (std::size_t i = 0; i < h_.universe.size(); ++i) c[h_.universe[i]] = color_[i];
        return c;
    }

 private:
    bool edge_satisfied(int e) {
        scratch_.clear();
        const auto& uni = h_.universe;
        for (int v : h_.edges[e].members) {
            const int i = static_cast<int>(std::lower_bound(uni.begin(), uni.end(), v) -
                                           uni.begin());
            scratch_.push_back(color_[i]);
        }
        return has_unique_value(scratch_);
    }

    bool dfs(std::size_t idx, int used) {
        if (idx == order_.size()) return true;
        if (++nodes_ > budget_)
            throw resource_error("cf_hypergraph_exact: node budget exhausted");
        const int i = order_[idx];
        for (int e : inc_[i]) --uncolored_[e];
        const int limit = std::min(cap_, used + 1);
        for (int col = 1; col <= limit; ++col) {
            color_[i] = col;
            bool ok = true;
            for (int e : inc_[i])
                if (uncolored_[e] == 0 && !edge_satisfied(e)) {
                    ok = false;
                    break;
                }
            if (ok && dfs(idx + 1, std::max(used, col))) return true;
        }
        color_[i] = 0;
        for (int e : inc_[i]) ++uncolored_[e];
        return false;
    }

    const Hypergraph& h_;
    int cap_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<int>> inc_;
    std::vector<int> uncolored_;
    std::vector<int> order_;
    std::vector<int> color_;
    std::vector<int> scratch_;
};

}  // namespace detail

// Exact conflict-free feasibility with `colors` colors. Small instances
// only; the search counts assignment nodes and raises resource_error at
// the budget instead of ever answering wrongly.
inline FeasibilityResult cf_hypergraph_exact(const Hypergraph& h, int colors,
                                             std::uint64_t node_budget = (1ull << 24)) {
    h.validate();
    if (colors < 1) throw precondition_error("cf_hypergraph_exact: colors must be >= 1");
    detail::CfHypergraphSearch search(h, colors, node_budget);
    if (search.run()) {
        FeasibilityResult r{true, search.witness()};
        if (find_cf_violation(h, r.witness))
            throw internal_error("exact hypergraph witness failed validation");
        return r;
    }
    return {false, {}};
}

}  // namespace cfon
