#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "bturan/bitset.hpp"

namespace bturan {

using VertexSet = Bitset;

// Immutable simple undirected graph with bitset adjacency rows.
// Vertices are dense integers 0..n-1; adjacency is kept symmetric and
// loop-free by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_internal(u, v);
        return g;
    }

    int n() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        return u != v && adj_[u].test(v);
    }
    int degree(int v) const { return adj_[v].count(); }
    const Bitset& neighbors(int v) const { return adj_[v]; }

    // Copy with one extra edge; no-op copy if the edge is already present.
    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.add_edge_internal(u, v);
        return g;
    }
    Graph without_edge(int u, int v) const {
        Graph g = *this;
        if (g.has_edge(u, v)) {
            g.adj_[u].reset(v);
            g.adj_[v].reset(u);
            --g.m_;
        }
        return g;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(size_t(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    // Subgraph induced on `keep`, relabeled densely in increasing vertex order.
    Graph induced(const Bitset& keep) const {
        assert(keep.size() == n_);
        std::vector<int> map(n_, -1);
        int k = 0;
        for (int v = keep.first(); v != -1; v = keep.next(v)) map[v] = k++;
        Graph g(k);
        for (int u = keep.first(); u != -1; u = keep.next(u)) {
            Bitset row = adj_[u] & keep;
            for (int v = row.next(u); v != -1; v = row.next(v))
                g.add_edge_internal(map[u], map[v]);
        }
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void add_edge_internal(int u, int v) {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

// Graph plus a certified bipartition (X, Y).  Parts partition 0..n-1 and
// every edge crosses between them; validated at construction.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(Graph g, Bitset part_x);

    const Graph& graph() const { return graph_; }
    const Bitset& part_x() const { return part_x_; }
    const Bitset& part_y() const { return part_y_; }
    int nx() const { return part_x_.count(); }
    int ny() const { return part_y_.count(); }

    // True when X occupies indices 0..|X|-1, the layout used by the
    // `bip <|X|> <|Y|>` serialization header.
    bool x_first() const;

    BipartiteGraph swapped() const { return BipartiteGraph(graph_, part_y_); }

private:
    Graph graph_;
    Bitset part_x_, part_y_;
};

// |N(S)|: size of the common neighborhood of all vertices in s.
// For a singleton this is the degree.  Empty s is an error.
int codegree(const Graph& g, const VertexSet& s);
int codegree_pair(const Graph& g, int u, int v);

// Common neighborhood N(S) as a bitset.
Bitset common_neighborhood(const Graph& g, const VertexSet& s);

// d(S) >= |S| + 1.
bool is_good(const Graph& g, const VertexSet& s);

// Number of 4-cycles, each counted once as a subgraph copy:
// half the sum over unordered pairs of binom(codegree, 2).
long long count_c4(const Graph& g);

// True iff no vertex pair has two common neighbors (girth > 4 among cycles
// through pairs), i.e. the graph is C4-free.
bool is_c4_free(const Graph& g);

// Shortest cycle length, or -1 when acyclic.
int girth(const Graph& g);

// Repeatedly delete the lowest-index vertex of degree < c*sqrt(j) where j is
// the current vertex count; returns the surviving vertices.
Bitset peel_min_degree_kept(const Graph& g, double c);

// The residual graph of the peeling process, relabeled densely.
Graph peel_min_degree(const Graph& g, double c);

}  // namespace bturan
