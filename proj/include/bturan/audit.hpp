#pragma once

#include <string>
#include <vector>

#include "bturan/detect.hpp"
#include "bturan/graph.hpp"

namespace bturan {

// One verified counting inequality.  holds <=> lhs >= rhs; both sides are
// exact integers (half-integer comparisons are stored doubled, see the id).
struct AuditReport {
    std::string inequality_id;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
    std::vector<std::vector<int>> witnesses;  // violating vertices/edges/sets
};

// Thrown when a check requires a B_t-free input but the detector found a copy.
struct bt_precondition_error : std::runtime_error {
    bt_precondition_error(int t, BtCertificate cert)
        : std::runtime_error("precondition violated: graph contains B_" + std::to_string(t)),
          certificate(std::move(cert)) {}
    BtCertificate certificate;
};

// All t-subsets S with d(S) >= t+1, each exactly once.  Enumeration walks
// t-subsets of each neighborhood and keeps S only at its least common
// neighbor, so no global dedup table is needed.
std::vector<VertexSet> enumerate_good_sets(const Graph& g, int t);

// Sum of d(S)(d(S)-1) over good t-sets.
long long good_set_sum(const Graph& g, int t);

// Number of C4 copies with an opposite pair inside some good t-set;
// each copy counted once.
long long n_c4_good(const Graph& g, int t);

// Bipartite variant: copies whose side-i pair lies inside a good t-set of
// side i.  side is 1 (part X) or 2 (part Y).
long long n_c4_good_bip(const BipartiteGraph& g, int t, int side);

// Number of C4 copies through the edge uv.
long long c4_through_edge(const Graph& g, int u, int v);

// good_set_sum >= sum d(u)^2 - 2(4t-1)e - (t-1)n^2 on B_t-free graphs.
AuditReport check_lemma21(const Graph& g, int t);

// Per side i: 2*N_i >= C(t,2) * (sum_{V_i} d(u)^2 - (2t-1)e - (t-1)n_j^2),
// stored doubled to stay in integers.
std::vector<AuditReport> check_lemma22(const BipartiteGraph& g, int t);

// Every edge uv lies on at most (t-1)(d(u)+d(v)) four-cycles, and in
// aggregate 4*N(C4,G) <= (t-1) * sum d(u)^2.  lhs is the minimum slack.
AuditReport check_per_edge_c4_bound(const Graph& g, int t);

// No neighborhood contains a t-leg spider of 2-paths, and
// 2 e(G[N(v)]) <= (2t-1) d(v) for every v.  lhs is the minimum slack.
AuditReport check_spider_claim(const Graph& g, int t);

}  // namespace bturan
