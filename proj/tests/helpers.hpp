#pragma once

#include <random>
#include <vector>

#include "bturan/graph.hpp"
#include "bturan/rng.hpp"

namespace testutil {

using bturan::Graph;

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

// parts 0..a-1 and a..a+b-1
inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

inline bturan::BipartiteGraph complete_bipartite_parts(int a, int b) {
    bturan::Bitset x(a + b);
    for (int i = 0; i < a; ++i) x.set(i);
    return bturan::BipartiteGraph(complete_bipartite(a, b), x);
}

// center 0, leaves 1..k
inline Graph star_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph::from_edges(k + 1, e);
}

// K_2 square S_t: shared edge (0,1), legs (2i+2, 2i+3)
inline Graph bt_graph(int t) {
    std::vector<std::pair<int, int>> e{{0, 1}};
    for (int i = 0; i < t; ++i) {
        int x = 2 * i + 2, y = 2 * i + 3;
        e.emplace_back(0, x);
        e.emplace_back(x, y);
        e.emplace_back(y, 1);
    }
    return Graph::from_edges(2 * t + 2, e);
}

inline Graph random_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (bturan::draw_bool(rng, p)) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.n(), e);
}

inline Graph random_relabel(const Graph& g, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    for (int i = g.n() - 1; i > 0; --i)
        std::swap(perm[i], perm[bturan::draw_below(rng, uint64_t(i + 1))]);
    return relabel(g, perm);
}

// independent C4 counter: all 4-subsets, all 3 opposite-pair splittings
inline long long count_c4_brute(const Graph& g) {
    long long total = 0;
    int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int quad[4] = {a, b, c, d};
                    // pairings: (0,1)|(2,3), (0,2)|(1,3), (0,3)|(1,2)
                    const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                    for (auto& pr : pairings) {
                        int p = quad[pr[0]], q = quad[pr[1]], r = quad[pr[2]], s = quad[pr[3]];
                        // C4 with opposite pairs {p,q} and {r,s}
                        if (g.has_edge(p, r) && g.has_edge(p, s) && g.has_edge(q, r) &&
                            g.has_edge(q, s))
                            ++total;
                    }
                }
    return total;
}

}  // namespace testutil
