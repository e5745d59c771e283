#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "cfon/exact.hpp"
#include "cfon/lower_bounds.hpp"
#include "cfon/pipeline.hpp"
#include "test_util.hpp"

using namespace cfon;

namespace {

// independent recount of one signature bit
bool naive_bit(int m, const EdgeColoring& coloring, int v, int color) {
    int times = 0;
    for (int u = 0; u < m; ++u)
        if (u != v && coloring[clique_edge_index(m, u, v)] == color) ++times;
    return times == 1;
}

EdgeColoring vertex_to_edge_coloring(const LineGraphResult& lr, const Coloring& c) {
    EdgeColoring ec(lr.graph.n);
    for (int i = 0; i < lr.graph.n; ++i) ec[i] = c[i];
    return ec;
}

}  // namespace

TEST_CASE("clique edge indexing is the lexicographic rank") {
    int next = 0;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(clique_edge_index(5, u, v) == next++);
    CHECK(clique_edge_index(5, 3, 1) == clique_edge_index(5, 1, 3));
}

TEST_CASE("rainbow triangle signatures") {
    // edges {0,1}=1, {0,2}=2, {1,2}=3
    SignatureTable table = signature_vectors(3, {1, 2, 3});
    CHECK(table.sig[0] == std::vector<bool>{true, true, false});
    CHECK(table.sig[1] == std::vector<bool>{true, false, true});
    CHECK(table.sig[2] == std::vector<bool>{false, true, true});

    LineCliqueCheck chk = check_line_clique_lb(3, {1, 2, 3});
    CHECK(chk.certified);
    CHECK(chk.colors_used == 3);
    CHECK(chk.bound == 2);
}

TEST_CASE("monochromatic cliques collapse every signature") {
    SignatureTable table = signature_vectors(3, {1, 1, 1});
    for (int v = 0; v < 3; ++v) CHECK(table.sig[v] == std::vector<bool>{false});

    LineCliqueCheck chk = check_line_clique_lb(4, {1, 1, 1, 1, 1, 1});
    REQUIRE_FALSE(chk.certified);
    REQUIRE(chk.counterexample.has_value());
    CHECK(*chk.counterexample == std::make_pair(0, 1));

    // the counterexample names a genuine CFON violation in L(K_4)
    LineGraphResult lr = line_graph(complete_graph(4));
    Coloring all_one(lr.graph.n, 1);
    auto violation = find_cfon_violation(lr.graph, all_one);
    REQUIRE(violation.has_value());
    const int bad = clique_edge_index(4, chk.counterexample->first, chk.counterexample->second);
    std::map<int, int> count;
    for (int u : lr.graph.adj[bad]) ++count[all_one[u]];
    for (const auto& [color, times] : count) CHECK(times != 1);
}

TEST_CASE("signature rows match a naive recount on random colorings") {
    SplitMix64 rng(601);
    for (int i = 0; i < 50; ++i) {
        const int m = 4;
        EdgeColoring ec = test_util::random_coloring(rng, m * (m - 1) / 2, 4, false);
        SignatureTable table = signature_vectors(m, ec);
        REQUIRE(table.m == m);
        for (int v = 0; v < m; ++v)
            for (int c = 1; c <= table.k; ++c)
                CHECK(table.sig[v][c - 1] == naive_bit(m, ec, v, c));
    }
}

TEST_CASE("partial colorings are rejected") {
    CHECK_THROWS_AS(signature_vectors(4, {1, 1, 1}), precondition_error);
    CHECK_THROWS_AS(signature_vectors(3, {1, 0, 1}), precondition_error);
    CHECK_THROWS_AS(signature_vectors(2, {1}), precondition_error);
    CHECK_THROWS_AS(lower_bound_line_clique(2), precondition_error);
}

TEST_CASE("lower bound values") {
    CHECK(lower_bound_line_clique(4) == 2);
    CHECK(lower_bound_line_clique(5) == 3);
    CHECK(lower_bound_line_clique(8) == 3);
    CHECK(lower_bound_line_clique(9) == 4);
}

TEST_CASE("valid colorings certify; counterexamples mark invalid colorings") {
    SplitMix64 rng(607);
    for (int m = 4; m <= 5; ++m) {
        LineGraphResult lr = line_graph(complete_graph(m));
        for (int i = 0; i < 30; ++i) {
            Coloring c = test_util::random_coloring(rng, lr.graph.n, 3, false);
            EdgeColoring ec = vertex_to_edge_coloring(lr, c);
            LineCliqueCheck chk = check_line_clique_lb(m, ec);
            const bool valid = cfon_valid(lr.graph, c);
            if (valid) CHECK(chk.certified);
            if (!chk.certified) {
                CHECK_FALSE(valid);
                // translation consistency: the collision pair names a
                // violated line-graph vertex
                const int bad = clique_edge_index(m, chk.counterexample->first,
                                                  chk.counterexample->second);
                std::map<int, int> count;
                for (int u : lr.graph.adj[bad]) ++count[c[u]];
                for (const auto& [color, times] : count) CHECK(times != 1);
            }
        }
    }
}

TEST_CASE("exact and pipeline colorings of small line-of-clique graphs certify") {
    for (int m = 4; m <= 6; ++m) {
        LineGraphResult lr = line_graph(complete_graph(m));
        std::vector<Coloring> colorings;
        if (m <= 5) colorings.push_back(chi_on_exact(lr.graph).witness);
        PipelineOptions opt;
        opt.random.seed = 40 + m;
        colorings.push_back(cfon_color_skfree(lr.graph, opt).coloring);
        for (const Coloring& c : colorings) {
            REQUIRE(cfon_valid(lr.graph, c));
            LineCliqueCheck chk = check_line_clique_lb(m, vertex_to_edge_coloring(lr, c));
            CHECK(chk.certified);
            CHECK(chk.colors_used >= lower_bound_line_clique(m));
        }
    }
}
