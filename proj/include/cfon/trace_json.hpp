#pragma once

#include "json.hpp"

#include "cfon/pipeline.hpp"
#include "cfon/random_color.hpp"

namespace cfon {

// Trace schema version 1; sizes are recorded in place of vertex sets to
// keep traces compact on large inputs.

inline nlohmann::json run_stats_to_json(const RunStats& s) {
    return nlohmann::json{
        {"resamples", s.resamples},
        {"escalations", s.escalations},
        {"distinct_colors", s.distinct_colors},
        {"levels", s.levels},
        {"colors_per_level", s.colors_per_level},
        {"palette_bound", s.palette_bound},
        {"beta_final", s.beta_final},
    };
}

inline nlohmann::json trace_to_json(const PeelTrace& t) {
    nlohmann::json rounds = nlohmann::json::array();
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
        const PeelRound& r = t.rounds[i];
        rounds.push_back(nlohmann::json{
            {"round", i + 1},
            {"v_prev_size", r.v_prev.size()},
            {"u_size", r.u.size()},
            {"delta_induced", r.delta_induced},
            {"threshold", r.threshold},
            {"algo", r.algo},
            {"d_max", r.d_max},
            {"gamma", r.gamma},
            {"s_min", r.s_min},
            {"s_max", r.s_max},
            {"t", r.t},
            {"t_analytic", r.t_analytic},
            {"gamma_analytic", r.gamma_analytic},
            {"palette_size", r.palette_size},
            {"colors_used", r.colors_used},
            {"resamples", r.resamples},
            {"escalations", r.escalations},
        });
    }
    return nlohmann::json{
        {"schema", 1},
        {"k", t.k},
        {"seed", t.seed},
        {"delta", t.delta},
        {"log_star_delta", t.log_star_delta},
        {"r", t.r},
        {"rounds", rounds},
        {"final_independent_size", t.final_independent.size()},
        {"finish_d_max", t.finish_d_max},
        {"finish_palette", t.finish_palette},
        {"finish_colors_used", t.finish_colors_used},
        {"product_space", t.product_space},
        {"distinct_final", t.distinct_final},
    };
}

}  // namespace cfon
