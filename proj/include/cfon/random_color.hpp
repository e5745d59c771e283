#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cfon/errors.hpp"
#include "cfon/hypergraph.hpp"
#include "cfon/mathutil.hpp"
#include "cfon/rng.hpp"

namespace cfon {

// Las Vegas conflict-free colorer for hypergraphs with edges of size at
// least 2t-1 where each edge intersects at most `gamma` others.
//
// Colors live in L = max(t, ceil(log2 s_max) + 1) levels with
// C = ceil(beta * (gamma+1)^(1/t) * ln(gamma+2)) colors per level. A
// vertex first draws level l with Pr[l] = 2^-l (the last level absorbs
// the tail), then a uniform color inside that level's private palette:
// geometric levels give every edge a level where its expected occupancy
// is constant, which a single uniform palette cannot do for edges much
// larger than the palette. While some edge lacks a uniquely colored
// member, all members of the lowest-index violated edge are redrawn;
// after budget_factor * |E| * (gamma+2) redraws the scale beta doubles,
// palettes are rebuilt, and the run restarts on a derived stream.
//
// Seed mapping: attempt a (a = 0, 1, ...) draws from
// SplitMix64(derive_seed(cfg.seed, a)); every vertex draw consumes one
// 64-bit word for the level (one plus the count of trailing one bits,
// clamped to L; an all-ones word continues into the next word) and one
// bounded draw for the color, in ascending vertex order.
//
// The returned coloring is validated before returning; an invalid
// coloring can never escape.

struct RandomColorConfig {
    double beta = 2.0;
    int budget_factor = 64;
    int max_escalations = 8;
    std::uint64_t seed = 0;
};

struct RunStats {
    std::uint64_t resamples = 0;
    int escalations = 0;
    int distinct_colors = 0;
    int levels = 0;
    int colors_per_level = 0;
    long long palette_bound = 0;
    double beta_final = 0.0;
};

struct escalation_error : std::runtime_error {
    RunStats stats;
    escalation_error(const std::string& what, RunStats s)
        : std::runtime_error(what), stats(s) {}
};

struct RandomParams {
    int t = 1;
    long long gamma = 0;
};

// Measured parameters: gamma from the hypergraph statistics and the
// largest t honoring the edge-size hypothesis 2t-1 <= s_min.
inline RandomParams choose_parameters(const Hypergraph& h) {
    if (h.edges.empty())
        throw precondition_error("choose_parameters: hypergraph has no edges");
    HypergraphStats st = hypergraph_stats(h);
    return {std::max(1, (st.s_min + 1) / 2), st.gamma};
}

struct RandomColoring {
    Coloring coloring;
    RunStats stats;
};

inline RandomColoring cf_color_random(const Hypergraph& h, int t, long long gamma,
                                      const RandomColorConfig& cfg) {
    h.validate();
    if (t < 1) throw precondition_error("cf_color_random: t must be >= 1");
    if (gamma < 0) throw precondition_error("cf_color_random: gamma must be >= 0");
    if (!(cfg.beta > 0.0)) throw precondition_error("cf_color_random: beta must be positive");
    if (cfg.budget_factor < 1)
        throw precondition_error("cf_color_random: budget_factor must be >= 1");

    RandomColoring out;
    out.coloring.assign(static_cast<std::size_t>(h.max_vertex_id() + 1), 0);
    RunStats& st = out.stats;
    st.beta_final = cfg.beta;

    if (h.edges.empty()) {
        for (int v : h.universe) out.coloring[v] = 1;
        st.distinct_colors = h.universe.empty() ? 0 : 1;
        st.palette_bound = 1;
        return out;
    }

    int s_max = 0;
    for (const auto& e : h.edges) {
        if (static_cast<int>(e.members.size()) < 2 * t - 1)
            throw precondition_error("cf_color_random: edge of size " +
                                     std::to_string(e.members.size()) +
                                     " below the required 2t-1 = " + std::to_string(2 * t - 1));
        s_max = std::max(s_max, static_cast<int>(e.members.size()));
    }

    const int levels = std::max(t, ceil_log2(s_max) + 1);
    st.levels = levels;

    const auto& uni = h.universe;
    const int nu = static_cast<int>(uni.size());
    const int ne = static_cast<int>(h.edges.size());
    auto upos = [&](int v) {
        return static_cast<int>(std::lower_bound(uni.begin(), uni.end(), v) - uni.begin());
    };
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(nu));
    for (int e = 0; e < ne; ++e)
        for (int v : h.edges[e].members) inc[upos(v)].push_back(e);

    const std::uint64_t budget = static_cast<std::uint64_t>(cfg.budget_factor) *
                                 static_cast<std::uint64_t>(ne) *
                                 static_cast<std::uint64_t>(gamma + 2);

    double beta = cfg.beta;
    std::vector<int> scratch;
    auto violated = [&](int e) {
        scratch.clear();
        for (int v : h.edges[e].members) scratch.push_back(out.coloring[v]);
        return !detail::has_unique_value(scratch);
    };

    for (int attempt = 0; attempt <= cfg.max_escalations; ++attempt) {
        const int c_level = std::max(
            1, static_cast<int>(std::ceil(beta * std::pow(static_cast<double>(gamma) + 1.0,
                                                          1.0 / static_cast<double>(t)) *
                                          std::log(static_cast<double>(gamma) + 2.0))));
        st.escalations = attempt;
        st.beta_final = beta;
        st.colors_per_level = c_level;
        st.palette_bound = static_cast<long long>(levels) * c_level;
        if (st.palette_bound > INT_MAX)
            throw resource_error("cf_color_random: palette beyond supported scale");

        SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(attempt)));
        auto draw = [&](int i) {
            int trailing = 0;
            while (true) {
                const std::uint64_t word = rng.next();
                const int ones = std::countr_one(word);
                trailing += ones;
                if (ones < 64 || trailing + 1 >= levels) break;
            }
            const int level = std::min(levels, 1 + trailing);
            const int color = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(c_level)));
            out.coloring[uni[i]] = (level - 1) * c_level + color + 1;
        };
        for (int i = 0; i < nu; ++i) draw(i);

        std::uint64_t spent = 0;
        int scan_from = 0;
        bool satisfied = false;
        while (true) {
            int bad = -1;
            for (int e = scan_from; e < ne; ++e)
                if (violated(e)) {
                    bad = e;
                    break;
                }
            if (bad < 0) {
                satisfied = true;
                break;
            }
            if (spent >= budget) break;
            ++spent;
            ++st.resamples;
            // edges below the first one touched stay satisfied
            int first_touched = bad;
            for (int v : h.edges[bad].members) {
                const int i = upos(v);
                draw(i);
                first_touched = std::min(first_touched, inc[i].front());
            }
            scan_from = first_touched;
        }
        if (satisfied) {
            if (find_cf_violation(h, out.coloring))
                throw internal_error("random coloring failed final validation");
            st.distinct_colors = distinct_colors(out.coloring, h.universe);
            return out;
        }
        beta *= 2.0;
    }
    throw escalation_error("cf_color_random: escalation limit exhausted", st);
}

}  // namespace cfon
