#include "bturan/graph.hpp"

#include <algorithm>
#include <cmath>

namespace bturan {

BipartiteGraph::BipartiteGraph(Graph g, Bitset part_x)
    : graph_(std::move(g)), part_x_(std::move(part_x)) {
    if (part_x_.size() != graph_.n())
        throw std::invalid_argument("bipartition size does not match graph");
    part_y_ = Bitset::full(graph_.n());
    part_y_.subtract(part_x_);
    for (int u = 0; u < graph_.n(); ++u) {
        const Bitset& row = graph_.neighbors(u);
        const Bitset& own = part_x_.test(u) ? part_x_ : part_y_;
        if (row.intersects(own))
            throw std::invalid_argument("edge inside one part: not bipartite for this partition");
    }
}

bool BipartiteGraph::x_first() const {
    int k = nx();
    for (int i = 0; i < k; ++i)
        if (!part_x_.test(i)) return false;
    return true;
}

int codegree(const Graph& g, const VertexSet& s) {
    return common_neighborhood(g, s).count();
}

Bitset common_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.size() != g.n()) throw std::invalid_argument("vertex set size does not match graph");
    int v0 = s.first();
    if (v0 == -1) throw std::invalid_argument("empty set has undefined codegree");
    Bitset acc = g.neighbors(v0);
    for (int v = s.next(v0); v != -1; v = s.next(v)) acc &= g.neighbors(v);
    return acc;
}

int codegree_pair(const Graph& g, int u, int v) {
    return g.neighbors(u).and_count(g.neighbors(v));
}

bool is_good(const Graph& g, const VertexSet& s) {
    return codegree(g, s) >= s.count() + 1;
}

long long count_c4(const Graph& g) {
    // Each C4 has two opposite pairs, so the pair sum counts it twice.
    long long twice = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            long long c = codegree_pair(g, u, v);
            twice += c * (c - 1) / 2;
        }
    return twice / 2;
}

bool is_c4_free(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (codegree_pair(g, u, v) >= 2) return false;
    return true;
}

int girth(const Graph& g) {
    // min over roots of the shortest closed walk through the root; every
    // non-tree edge closes such a walk, and the minimum over all roots is
    // attained by a root on a shortest cycle
    int best = -1;
    std::vector<int> dist(g.n()), parent(g.n()), queue(g.n());
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        int head = 0, tail = 0;
        queue[tail++] = s;
        dist[s] = 0;
        while (head < tail) {
            int u = queue[head++];
            g.neighbors(u).for_each([&](int v) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue[tail++] = v;
                }
            });
        }
        for (int u = 0; u < g.n(); ++u) {
            if (dist[u] == -1) continue;
            for (int v = g.neighbors(u).next(u); v != -1; v = g.neighbors(u).next(v)) {
                if (dist[v] == -1 || parent[u] == v || parent[v] == u) continue;
                int len = dist[u] + dist[v] + 1;
                if (best == -1 || len < best) best = len;
            }
        }
    }
    return best;
}

Bitset peel_min_degree_kept(const Graph& g, double c) {
    if (!(c > 0)) throw std::invalid_argument("peel threshold c must be positive");
    Bitset alive = Bitset::full(g.n());
    int j = g.n();
    while (j > 0) {
        double threshold = c * std::sqrt(double(j));
        int victim = -1;
        for (int v = alive.first(); v != -1; v = alive.next(v)) {
            if (double(g.neighbors(v).and_count(alive)) < threshold) {
                victim = v;
                break;
            }
        }
        if (victim == -1) break;
        alive.reset(victim);
        --j;
    }
    return alive;
}

Graph peel_min_degree(const Graph& g, double c) {
    return g.induced(peel_min_degree_kept(g, c));
}

}  // namespace bturan
