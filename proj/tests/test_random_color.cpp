#include <catch2/catch_amalgamated.hpp>

#include "cfon/random_color.hpp"
#include "test_util.hpp"

using namespace cfon;
using test_util::naive_cf_violation;
using test_util::random_bounded_degree_hypergraph;

TEST_CASE("choose_parameters honors the edge-size hypothesis") {
    Hypergraph five = make_hypergraph({1, 2, 3, 4, 5}, {{1, 2, 3, 4, 5}});
    RandomParams p = choose_parameters(five);
    CHECK(p.t == 3);  // 2*3 - 1 = 5
    CHECK(p.gamma == 0);

    Hypergraph tiny = make_hypergraph({1, 2}, {{1}, {1, 2}});
    CHECK(choose_parameters(tiny).t == 1);

    Hypergraph empty = make_hypergraph({1, 2}, {});
    CHECK_THROWS_AS(choose_parameters(empty), precondition_error);
}

TEST_CASE("measured t matches log2(delta)/2 + 1 when s_min = log2(delta) + 1") {
    // delta = 16: edges of size 5 give t = 3 = log2(16)/2 + 1
    Hypergraph h = make_hypergraph({1, 2, 3, 4, 5, 6}, {{1, 2, 3, 4, 5}, {2, 3, 4, 5, 6}});
    CHECK(choose_parameters(h).t == 3);
}

TEST_CASE("single edge of five vertices colors validly with a fixed seed") {
    Hypergraph h = make_hypergraph({1, 2, 3, 4, 5}, {{1, 2, 3, 4, 5}});
    RandomColorConfig cfg;
    cfg.seed = 42;
    RandomColoring run = cf_color_random(h, 3, 0, cfg);
    CHECK(cf_valid(h, run.coloring));
    CHECK(run.stats.levels == 4);  // max(t=3, ceil(log2 5)+1 = 4)
    CHECK(run.stats.palette_bound == 4LL * run.stats.colors_per_level);
    CHECK(run.stats.distinct_colors <= run.stats.palette_bound);
    for (int v : h.universe) {
        CHECK(run.coloring[v] >= 1);
        CHECK(run.coloring[v] <= run.stats.palette_bound);
    }
    RandomColoring again = cf_color_random(h, 3, 0, cfg);
    CHECK(again.coloring == run.coloring);
    CHECK(again.stats.resamples == run.stats.resamples);
}

TEST_CASE("edgeless hypergraph colors everything 1 with zero resamples") {
    Hypergraph h = make_hypergraph({3, 5, 9}, {});
    RandomColorConfig cfg;
    RandomColoring run = cf_color_random(h, 1, 0, cfg);
    CHECK(run.stats.resamples == 0);
    for (int v : h.universe) CHECK(run.coloring[v] == 1);
}

TEST_CASE("open neighborhoods of the Petersen graph") {
    Graph g = test_util::petersen();
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    Hypergraph h = build_nbr_hypergraph(g, all, all);
    RandomParams p = choose_parameters(h);
    CHECK(p.t == 2);  // every neighborhood has size 3
    RandomColorConfig cfg;
    cfg.seed = 7;
    RandomColoring run = cf_color_random(h, p.t, p.gamma, cfg);
    CHECK(cf_valid(h, run.coloring));
    CHECK(run.stats.distinct_colors <= run.stats.palette_bound);
}

TEST_CASE("edge-size precondition is enforced") {
    Hypergraph h = make_hypergraph({1, 2, 3}, {{1, 2, 3}});
    RandomColorConfig cfg;
    CHECK_THROWS_AS(cf_color_random(h, 3, 0, cfg), precondition_error);
    CHECK_THROWS_AS(cf_color_random(h, 0, 0, cfg), precondition_error);
    CHECK_THROWS_AS(cf_color_random(h, 1, -1, cfg), precondition_error);
}

TEST_CASE("always valid across seeds and instances") {
    SplitMix64 rng(307);
    for (int i = 0; i < 60; ++i) {
        Hypergraph h = random_bounded_degree_hypergraph(rng, 20, 16, 6);
        if (h.edges.empty()) continue;
        RandomParams p = choose_parameters(h);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            RandomColorConfig cfg;
            cfg.seed = rng.next();
            RandomColoring run = cf_color_random(h, p.t, p.gamma, cfg);
            REQUIRE_FALSE(naive_cf_violation(h, run.coloring).has_value());
            CHECK(run.stats.escalations <= cfg.max_escalations);
        }
    }
}

TEST_CASE("beta doubles per escalation and stats survive exhaustion") {
    // one edge of two vertices and a single color per level makes
    // conflicts common, so a budget of a few redraws escalates
    Hypergraph h = make_hypergraph({1, 2}, {{1, 2}});
    int exhausted = 0, escalated = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RandomColorConfig cfg;
        cfg.beta = 1e-9;  // floors colors_per_level at 1
        cfg.budget_factor = 1;
        cfg.max_escalations = 1;
        cfg.seed = seed;
        try {
            RandomColoring run = cf_color_random(h, 1, 0, cfg);
            CHECK(cf_valid(h, run.coloring));
            if (run.stats.escalations > 0) {
                ++escalated;
                CHECK(run.stats.beta_final == cfg.beta * 2.0);
            }
        } catch (const escalation_error& e) {
            ++exhausted;
            CHECK(e.stats.escalations == cfg.max_escalations);
            CHECK(e.stats.resamples > 0);
        }
    }
    CHECK(escalated + exhausted > 0);
}
