#pragma once

#include <algorithm>
#include <climits>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cfon/errors.hpp"
#include "cfon/graph.hpp"

namespace cfon {

// Total color assignment indexed by vertex id. 0 is the blank value used
// for vertices outside the layer being colored; the checker treats 0 like
// any other color, uniqueness is judged on actual values.
using Coloring = std::vector<int>;

struct Hyperedge {
    int owner = -1;            // tagging vertex, -1 when untagged
    std::vector<int> members;  // sorted ascending, duplicate-free, nonempty
};

// Vertex universe plus a sequence of owner-tagged edges. Duplicate member
// sets under different owners are permitted and retained.
struct Hypergraph {
    std::vector<int> universe;  // sorted ascending vertex ids
    std::vector<Hyperedge> edges;

    int max_vertex_id() const { return universe.empty() ? -1 : universe.back(); }

    void validate() const {
        for (std::size_t i = 1; i < universe.size(); ++i)
            if (universe[i - 1] >= universe[i])
                throw precondition_error("hypergraph universe not strictly increasing");
        if (!universe.empty() && universe.front() < 0)
            throw precondition_error("hypergraph universe has a negative id");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto& members = edges[e].members;
            if (members.empty())
                throw precondition_error("hyperedge " + std::to_string(e) + " is empty");
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (i > 0 && members[i - 1] >= members[i])
                    throw precondition_error("hyperedge " + std::to_string(e) +
                                             " not strictly increasing");
                if (!std::binary_search(universe.begin(), universe.end(), members[i]))
                    throw precondition_error("hyperedge " + std::to_string(e) +
                                             " leaves the universe");
            }
        }
    }
};

// Convenience builder for ad-hoc hypergraphs: sorts and dedupes its
// inputs, then checks the invariants.
inline Hypergraph make_hypergraph(std::vector<int> universe,
                                  std::vector<std::vector<int>> members,
                                  std::vector<int> owners = {}) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    Hypergraph h;
    h.universe = std::move(universe);
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::sort(members[i].begin(), members[i].end());
        members[i].erase(std::unique(members[i].begin(), members[i].end()), members[i].end());
        Hyperedge e;
        e.owner = i < owners.size() ? owners[i] : -1;
        e.members = std::move(members[i]);
        h.edges.push_back(std::move(e));
    }
    h.validate();
    return h;
}

// Neighborhood hypergraph: universe = base, one edge per owner v holding
// N_G(v) ∩ base. An owner with an empty intersection is a contract
// violation and is reported by name.
inline Hypergraph build_nbr_hypergraph(const Graph& g, const std::vector<int>& base,
                                       const std::vector<int>& owners) {
    Hypergraph h;
    h.universe = base;
    std::sort(h.universe.begin(), h.universe.end());
    h.universe.erase(std::unique(h.universe.begin(), h.universe.end()), h.universe.end());
    if (!h.universe.empty() && (h.universe.front() < 0 || h.universe.back() >= g.n))
        throw precondition_error("build_nbr_hypergraph: base vertex out of range");
    std::vector<char> in_base(static_cast<std::size_t>(g.n), 0);
    for (int v : h.universe) in_base[v] = 1;
    std::vector<int> sorted_owners = owners;
    std::sort(sorted_owners.begin(), sorted_owners.end());
    sorted_owners.erase(std::unique(sorted_owners.begin(), sorted_owners.end()),
                        sorted_owners.end());
    for (int v : sorted_owners) {
        if (v < 0 || v >= g.n)
            throw precondition_error("build_nbr_hypergraph: owner out of range");
        Hyperedge e;
        e.owner = v;
        for (int w : g.adj[v])
            if (in_base[w]) e.members.push_back(w);
        if (e.members.empty())
            throw precondition_error("build_nbr_hypergraph: owner " + std::to_string(v) +
                                     " has an empty neighborhood within the base");
        h.edges.push_back(std::move(e));
    }
    return h;
}

namespace detail {

// sorts `values` in place; true when some value occurs exactly once
inline bool has_unique_value(std::vector<int>& values) {
    std::sort(values.begin(), values.end());
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        if (j - i == 1) return true;
        i = j;
    }
    return false;
}

}  // namespace detail

// Lowest-index edge with no uniquely colored member, or nullopt when the
// coloring is conflict-free. The coloring must cover the whole universe.
inline std::optional<int> find_cf_violation(const Hypergraph& h, const Coloring& c) {
    if (static_cast<int>(c.size()) <= h.max_vertex_id())
        throw precondition_error("coloring does not cover the hypergraph universe");
    std::vector<int> scratch;
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        scratch.clear();
        for (int v : h.edges[e].members) scratch.push_back(c[v]);
        if (!detail::has_unique_value(scratch)) return e;
    }
    return std::nullopt;
}

inline bool cf_valid(const Hypergraph& h, const Coloring& c) {
    return !find_cf_violation(h, c).has_value();
}

struct HypergraphStats {
    int d_max = 0;       // max number of edges containing one vertex
    long long gamma = 0;  // max number of other edges an edge intersects
    int s_min = 0;
    int s_max = 0;
};

// Exact statistics; gamma via per-vertex incidence lists with an epoch
// stamp, O(sum |e| * d_max).
inline HypergraphStats hypergraph_stats(const Hypergraph& h) {
    HypergraphStats st;
    if (h.edges.empty()) return st;
    const auto& uni = h.universe;
    auto upos = [&](int v) {
        return static_cast<int>(std::lower_bound(uni.begin(), uni.end(), v) - uni.begin());
    };
    std::vector<std::vector<int>> inc(uni.size());
    st.s_min = INT_MAX;
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        const auto& members = h.edges[e].members;
        st.s_min = std::min(st.s_min, static_cast<int>(members.size()));
        st.s_max = std::max(st.s_max, static_cast<int>(members.size()));
        for (int v : members) inc[upos(v)].push_back(e);
    }
    for (const auto& ids : inc)
        st.d_max = std::max(st.d_max, static_cast<int>(ids.size()));
    std::vector<int> stamp(h.edges.size(), -1);
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        long long touching = 0;
        for (int v : h.edges[e].members)
            for (int f : inc[upos(v)])
                if (f != e && stamp[f] != e) {
                    stamp[f] = e;
                    ++touching;
                }
        st.gamma = std::max(st.gamma, touching);
    }
    return st;
}

inline int distinct_colors(const Coloring& c, const std::vector<int>& vertices) {
    std::vector<int> values;
    values.reserve(vertices.size());
    for (int v : vertices) values.push_back(c[v]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return static_cast<int>(values.size());
}

// Coloring file: n lines '<v> <color>' with 1-based vertices and colors
// >= 1; 'c' comment lines allowed; every vertex exactly once.
inline Coloring read_coloring(std::istream& in, int n) {
    Coloring c(static_cast<std::size_t>(n), -1);
    std::string line;
    int line_no = 0;
    long long assigned = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        long long v = 0, color = 0;
        if (!(ls >> v >> color))
            throw parse_error("line " + std::to_string(line_no) +
                              ": malformed coloring line, expected '<v> <color>'");
        std::string rest;
        if (ls >> rest)
            throw parse_error("line " + std::to_string(line_no) + ": trailing tokens");
        if (v < 1 || v > n)
            throw parse_error("line " + std::to_string(line_no) + ": vertex " +
                              std::to_string(v) + " out of range for n=" + std::to_string(n));
        if (color < 1)
            throw parse_error("line " + std::to_string(line_no) + ": colors must be >= 1");
        if (c[v - 1] != -1)
            throw parse_error("line " + std::to_string(line_no) + ": vertex " +
                              std::to_string(v) + " colored twice");
        c[v - 1] = static_cast<int>(color);
        ++assigned;
    }
    if (assigned != n)
        throw parse_error("coloring covers " + std::to_string(assigned) + " of " +
                          std::to_string(n) + " vertices");
    return c;
}

inline void write_coloring(std::ostream& out, const Coloring& c) {
    for (std::size_t v = 0; v < c.size(); ++v) out << v + 1 << ' ' << c[v] << '\n';
}

}  // namespace cfon
