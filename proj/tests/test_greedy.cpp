#include <catch2/catch_amalgamated.hpp>

#include "cfon/greedy.hpp"
#include "test_util.hpp"

using namespace cfon;
using test_util::naive_cf_violation;
using test_util::random_bounded_degree_hypergraph;

TEST_CASE("single edge: one round vertex, leftovers take the base color") {
    Hypergraph h = make_hypergraph({1, 2, 3}, {{1, 2, 3}});
    Coloring c = cf_color_bounded_degree(h);
    CHECK(cf_valid(h, c));
    CHECK(c == Coloring{0, 2, 1, 1});
    CHECK(distinct_colors(c, h.universe) <= 2);
}

TEST_CASE("sunflower: the kernel is picked in round one, two colors total") {
    Hypergraph h = make_hypergraph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
    Coloring c = cf_color_bounded_degree(h);
    CHECK(cf_valid(h, c));
    CHECK(c[0] == 4);  // d_max + 1, every edge hit immediately
    CHECK(distinct_colors(c, h.universe) == 2);
}

TEST_CASE("triangle system stays within d_max + 1 colors") {
    Hypergraph h = make_hypergraph({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
    Coloring c = cf_color_bounded_degree(h);
    CHECK(cf_valid(h, c));
    CHECK(distinct_colors(c, h.universe) <= 3);
}

TEST_CASE("vertices outside every edge take the base color") {
    Hypergraph h = make_hypergraph({0, 1, 2, 9}, {{0, 1}});
    Coloring c = cf_color_bounded_degree(h);
    CHECK(cf_valid(h, c));
    CHECK(c[2] >= 1);
    CHECK(c[9] >= 1);
}

TEST_CASE("greedy bound holds on random bounded-degree hypergraphs") {
    SplitMix64 rng(211);
    for (int i = 0; i < 200; ++i) {
        Hypergraph h = random_bounded_degree_hypergraph(rng, 24, 30, 6);
        HypergraphStats st = hypergraph_stats(h);
        Coloring c = cf_color_bounded_degree(h);
        REQUIRE_FALSE(naive_cf_violation(h, c).has_value());
        CHECK(distinct_colors(c, h.universe) <= st.d_max + 1);
        for (int v : h.universe) {
            CHECK(c[v] >= 1);
            CHECK(c[v] <= st.d_max + 1);
        }
    }
}

TEST_CASE("greedy coloring is deterministic") {
    SplitMix64 rng(223);
    Hypergraph h = random_bounded_degree_hypergraph(rng, 20, 25, 5);
    CHECK(cf_color_bounded_degree(h) == cf_color_bounded_degree(h));
}

TEST_CASE("lemma3 on the claw colors the hub once") {
    Graph g = star_graph(3);
    Lemma3Coloring out = lemma3_color(g, {1, 2, 3});
    CHECK(out.coloring[1] == 0);
    CHECK(out.coloring[2] == 0);
    CHECK(out.coloring[3] == 0);
    CHECK(out.coloring[0] >= 1);  // the hub is the unique neighbor of every leaf
    CHECK(out.colors_used == 1);
}

TEST_CASE("lemma3 on C_6 with alternating vertices") {
    Graph g = cycle_graph(6);
    std::vector<int> a{0, 2, 4};
    Hypergraph h = build_nbr_hypergraph(g, {1, 3, 5}, a);
    CHECK(hypergraph_stats(h).d_max == 2);
    Lemma3Coloring out = lemma3_color(g, a);
    CHECK(out.palette_size == 3);
    CHECK(out.colors_used <= 3);
    for (int v : a) {
        std::vector<int> seen;
        for (int w : g.adj[v]) seen.push_back(out.coloring[w]);
        CHECK(detail::has_unique_value(seen));
    }
}

TEST_CASE("lemma3 rejects dependent or isolated A") {
    CHECK_THROWS_WITH(lemma3_color(complete_graph(2), {0, 1}),
                      Catch::Matchers::ContainsSubstring("not independent"));
    Graph g = parse_graph("p cfon 3 1\ne 1 2\n");
    CHECK_THROWS_WITH(lemma3_color(g, {2}), Catch::Matchers::ContainsSubstring("isolated"));
}

TEST_CASE("lemma3 contract on claw-free instances") {
    SplitMix64 rng(229);
    for (int i = 0; i < 30; ++i) {
        Graph g = test_util::random_line_graph(8 + static_cast<int>(rng.next_below(7)), 0.4,
                                               rng);
        std::vector<int> a = test_util::greedy_maximal_independent_set(g);
        Hypergraph h = build_nbr_hypergraph(
            g,
            [&] {
                std::vector<char> in_a(g.n, 0);
                for (int v : a) in_a[v] = 1;
                std::vector<int> b;
                for (int v = 0; v < g.n; ++v)
                    if (!in_a[v]) b.push_back(v);
                return b;
            }(),
            a);
        CHECK(hypergraph_stats(h).d_max <= 2);  // claw-free: k - 1 with k = 3
        Lemma3Coloring out = lemma3_color(g, a);
        CHECK(out.colors_used <= 3);
    }
}
