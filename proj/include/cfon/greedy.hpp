#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cfon/errors.hpp"
#include "cfon/graph.hpp"
#include "cfon/hypergraph.hpp"

namespace cfon {

// Deterministic conflict-free coloring with at most d_max + 1 colors,
// where d_max is the maximum number of edges containing one vertex.
//
// The algorithm runs rounds with colors d_max+1 down to 2. A round grows
// a maximal set S of uncolored vertices, scanning ids ascending, such
// that no not-yet-satisfied ("unhit") edge contains two members of S,
// then assigns the round color to all of S. An unhit edge that ends the
// round with exactly one S-member is satisfied for good: that member
// keeps the round color, every other member is colored in a strictly
// later round or with the base color 1, and round colors are never
// reused. An edge stays unhit only while all its members are uncolored,
// and by maximality of S each such member loses at least one unhit edge
// per round, so after at most d_max rounds no unhit edge remains.
// Leftover vertices take the base color 1.
inline Coloring cf_color_bounded_degree(const Hypergraph& h) {
    h.validate();
    Coloring color(static_cast<std::size_t>(h.max_vertex_id() + 1), 0);
    const int nu = static_cast<int>(h.universe.size());
    const int ne = static_cast<int>(h.edges.size());
    if (nu == 0) return color;

    const auto& uni = h.universe;
    auto upos = [&](int v) {
        return static_cast<int>(std::lower_bound(uni.begin(), uni.end(), v) - uni.begin());
    };
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(nu));
    for (int e = 0; e < ne; ++e)
        for (int v : h.edges[e].members) inc[upos(v)].push_back(e);
    int d_max = 0;
    for (const auto& ids : inc) d_max = std::max(d_max, static_cast<int>(ids.size()));

    std::vector<char> unhit(static_cast<std::size_t>(ne), 1);
    std::vector<char> vertex_colored(static_cast<std::size_t>(nu), 0);
    std::vector<int> s_count(static_cast<std::size_t>(ne), 0);
    int unhit_left = ne;

    for (int round_color = d_max + 1; unhit_left > 0; --round_color) {
        if (round_color < 2) throw internal_error("bounded-degree coloring did not converge");
        for (int i = 0; i < nu; ++i) {
            if (vertex_colored[i]) continue;
            bool blocked = false;
            for (int e : inc[i])
                if (unhit[e] && s_count[e] > 0) {
                    blocked = true;
                    break;
                }
            if (blocked) continue;
            vertex_colored[i] = 1;
            color[uni[i]] = round_color;
            for (int e : inc[i])
                if (unhit[e]) ++s_count[e];
        }
        for (int e = 0; e < ne; ++e) {
            if (!unhit[e]) continue;
            if (s_count[e] > 1) throw internal_error("round set entered an edge twice");
            if (s_count[e] == 1) {
                unhit[e] = 0;
                --unhit_left;
            }
            s_count[e] = 0;
        }
        // unhit edges must still be entirely uncolored
        for (int e = 0; e < ne; ++e) {
            if (!unhit[e]) continue;
            for (int v : h.edges[e].members)
                if (vertex_colored[upos(v)])
                    throw internal_error("unhit edge holds a colored vertex");
        }
    }
    for (int i = 0; i < nu; ++i)
        if (!vertex_colored[i]) color[uni[i]] = 1;
    if (find_cf_violation(h, color))
        throw internal_error("bounded-degree coloring failed validation");
    return color;
}

struct Lemma3Coloring {
    Coloring coloring;    // colors on B = V \ A, zeros on A
    int hyper_d_max = 0;  // max hyperedge count over B-vertices
    int palette_size = 0;  // hyper_d_max + 1
    int colors_used = 0;
};

// Colors B = V \ A so that every vertex of the independent set A sees
// some color exactly once in its open neighborhood. Each vertex of A must
// have at least one neighbor (necessarily in B).
inline Lemma3Coloring lemma3_color(const Graph& g, const std::vector<int>& a_set) {
    std::vector<int> a = a_set;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (!a.empty() && (a.front() < 0 || a.back() >= g.n))
        throw precondition_error("lemma3_color: A vertex out of range");
    std::vector<char> in_a(static_cast<std::size_t>(g.n), 0);
    for (int v : a) in_a[v] = 1;
    for (int v : a) {
        if (g.adj[v].empty())
            throw precondition_error("lemma3_color: vertex " + std::to_string(v) +
                                     " of A is isolated");
        for (int w : g.adj[v])
            if (in_a[w])
                throw precondition_error("lemma3_color: A is not independent, edge (" +
                                         std::to_string(v) + "," + std::to_string(w) + ")");
    }
    std::vector<int> b;
    b.reserve(static_cast<std::size_t>(g.n) - a.size());
    for (int v = 0; v < g.n; ++v)
        if (!in_a[v]) b.push_back(v);

    Hypergraph h = build_nbr_hypergraph(g, b, a);
    HypergraphStats st = hypergraph_stats(h);
    Lemma3Coloring out;
    out.coloring = cf_color_bounded_degree(h);
    out.coloring.resize(static_cast<std::size_t>(g.n), 0);
    out.hyper_d_max = st.d_max;
    out.palette_size = st.d_max + 1;
    out.colors_used = distinct_colors(out.coloring, b);

    std::vector<int> scratch;
    for (int v : a) {
        scratch.clear();
        for (int w : g.adj[v]) scratch.push_back(out.coloring[w]);
        if (!detail::has_unique_value(scratch))
            throw internal_error("lemma3_color left vertex " + std::to_string(v) +
                                 " without a uniquely colored neighbor");
    }
    return out;
}

}  // namespace cfon
