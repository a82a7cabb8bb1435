#include "doctest.h"

#include "bturan/constructions.hpp"
#include "bturan/graph.hpp"
#include "helpers.hpp"

using namespace bturan;
using namespace testutil;

TEST_CASE("codegree basics") {
    Graph k23 = complete_bipartite(2, 3);
    CHECK(codegree(k23, Bitset::of(5, {0, 1})) == 3);
    CHECK(codegree(k23, Bitset::of(5, {2, 3})) == 2);
    CHECK(codegree(k23, Bitset::of(5, {0})) == 3);

    Graph c6 = cycle_graph(6);
    CHECK(codegree(c6, Bitset::of(6, {0, 2})) == 1);

    CHECK_THROWS_AS(codegree(k23, Bitset(5)), std::invalid_argument);
}

TEST_CASE("codegree on the Heawood graph never exceeds 1") {
    Graph h = pg_incidence(2).graph();
    REQUIRE(h.n() == 14);
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v) CHECK(codegree_pair(h, u, v) <= 1);
}

TEST_CASE("is_good") {
    Graph k23 = complete_bipartite(2, 3);
    CHECK(is_good(k23, Bitset::of(5, {0, 1})));       // 3 >= 3
    CHECK_FALSE(is_good(k23, Bitset::of(5, {2, 3})));  // 2 < 3
    Graph s2 = star_graph(2);
    CHECK(is_good(s2, Bitset::of(3, {0})));  // center: 2 >= 2
}

TEST_CASE("count_c4 on named graphs") {
    CHECK(count_c4(cycle_graph(4)) == 1);
    CHECK(count_c4(complete_bipartite(3, 3)) == 9);
    CHECK(count_c4(er_polarity(3)) == 0);
    CHECK(is_c4_free(er_polarity(3)));
}

TEST_CASE("count_c4 agrees with 4-subset brute force") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n = 4 + int(seed % 9);  // up to 12
        Graph g = random_graph(n, 0.4, 1000 + seed);
        CHECK(count_c4(g) == count_c4_brute(g));
    }
}

TEST_CASE("codegree monotonicity under subset growth") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        Graph g = random_graph(10, 0.5, 500 + it);
        int a = int(draw_below(rng, 10));
        int b = int(draw_below(rng, 10));
        int c = int(draw_below(rng, 10));
        Bitset s = Bitset::of(10, {a});
        Bitset s2 = Bitset::of(10, {a, b, c});
        CHECK(codegree(g, s) >= codegree(g, s2));
    }
}

TEST_CASE("adjacency stays symmetric") {
    Graph g = random_graph(12, 0.3, 99);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    CHECK(g.edge_count() * 2 == [&] {
        long long s = 0;
        for (int u = 0; u < g.n(); ++u) s += g.degree(u);
        return s;
    }());
}

TEST_CASE("girth") {
    CHECK(girth(cycle_graph(6)) == 6);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(girth(path_graph(5)) == -1);
    CHECK(girth(pg_incidence(2).graph()) == 6);
    CHECK(girth(complete_bipartite(2, 3)) == 4);
}

TEST_CASE("peel_min_degree keeps K5 and empties a star") {
    Graph k5 = complete_graph(5);
    CHECK(peel_min_degree(k5, 1.0) == k5);

    Graph star = star_graph(9);
    CHECK(peel_min_degree(star, 1.0).n() == 0);
}

TEST_CASE("peel_min_degree residual satisfies the degree guarantee") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(14, 0.25, 2000 + seed);
        double c = 0.8;
        Graph r = peel_min_degree(g, c);
        int j = r.n();
        for (int v = 0; v < j; ++v) CHECK(double(r.degree(v)) >= c * std::sqrt(double(j)));
    }
}

TEST_CASE("peel_min_degree deletes lowest index first") {
    // two disjoint triangles plus a pendant at vertex 0 and one at vertex 3;
    // both pendants qualify, the lower-indexed one must fall first
    Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 6}, {3, 7}});
    Bitset kept = peel_min_degree_kept(g, 1.2);
    // pendant vertices have degree 1 < 1.2*sqrt(8): both eventually removed
    CHECK_FALSE(kept.test(6));
    CHECK_FALSE(kept.test(7));
}

TEST_CASE("bipartite invariant validation") {
    Graph tri = complete_graph(3);
    CHECK_THROWS_AS(BipartiteGraph(tri, Bitset::of(3, {0})), std::invalid_argument);
    BipartiteGraph ok = complete_bipartite_parts(2, 3);
    CHECK(ok.nx() == 2);
    CHECK(ok.ny() == 3);
    CHECK(ok.x_first());
    CHECK_FALSE(ok.swapped().x_first());
}
