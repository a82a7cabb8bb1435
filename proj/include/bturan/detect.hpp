#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bturan/graph.hpp"

namespace bturan {

// A witnessed copy of B_t: t four-cycles u-x_i-y_i-v sharing the edge uv,
// vertex-disjoint outside it.
struct BtCertificate {
    std::pair<int, int> shared_edge;
    std::vector<std::pair<int, int>> legs;  // (x_i, y_i)
};

bool validate_certificate(const Graph& g, const BtCertificate& cert);

// Auxiliary graph of an edge uv: vertex set (N(u)\{v}) u (N(v)\{u}),
// edges of g with one endpoint in each side (common neighbors sit on both).
struct AuxGraph {
    Graph graph;               // dense, on sorted host vertices
    std::vector<int> vertices; // aux id -> host id, ascending
    Bitset side_u, side_v;     // host-id masks
};

AuxGraph make_aux_graph(const Graph& g, int u, int v);
Graph aux_graph(const Graph& g, int u, int v);

// min(nu(h), cap) for a general graph, exact up to the cap.
int max_matching_size(const Graph& h, int cap);

// Lexicographically least matching of the given size, if one exists.
std::optional<std::vector<std::pair<int, int>>> lex_min_matching(const Graph& h, int size);

// A certificate iff some edge uv has nu(G_uv) >= t; prefers the
// lexicographically least shared edge, then the least matching.
std::optional<BtCertificate> contains_bt(const Graph& g, int t);

// Same decision restricted to the given candidate shared edges.
std::optional<BtCertificate> contains_bt_through(const Graph& g, int t,
                                                 const std::vector<std::pair<int, int>>& shared);

inline bool is_bt_free(const Graph& g, int t) { return !contains_bt(g, t).has_value(); }

// Brute-force backtracking over shared edges and t disjoint C4 completions;
// independent of the matching characterization.  Intended for small graphs.
bool contains_bt_oracle(const Graph& g, int t);

// True iff G[N(v)] contains a center u and t vertex-disjoint paths u-w-w'
// inside N(v).
bool contains_spider(const Graph& g, int v, int t);

}  // namespace bturan
