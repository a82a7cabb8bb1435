#pragma once

#include <cstdint>

#include "bturan/graph.hpp"

namespace bturan {

bool is_prime(long long q);

// Polarity graph of PG(2,q), q prime: vertices are projective points
// (canonical representative = lexicographically least triple with first
// nonzero coordinate 1, enumerated in lexicographic order), u ~ v iff
// u.v = 0 over F_q and u != v.  q^2+q+1 vertices, q(q+1)^2/2 edges, C4-free.
Graph er_polarity(int q);

// Point-line incidence graph of PG(2,q), q prime: points occupy indices
// 0..q^2+q, lines follow in the same canonical order.  (q+1)-regular,
// girth 6.
BipartiteGraph pg_incidence(int q);

// Replace vertex i by the independent block [i*s, (i+1)*s) and every edge
// by a complete join of blocks.
Graph blow_up(const Graph& base, int s);

// X-vertices expand to blocks of size a (placed first, in increasing vertex
// order), Y-vertices to blocks of size b.
BipartiteGraph bipartite_blow_up(const BipartiteGraph& base, int a, int b);

// s-blow-up of the largest fitting polarity graph, padded with isolated
// vertices to exactly n, where s = floor((t+1)/2).  B_t-free.
Graph construct_bt_free(int t, int n);

// (a,b)-blow-up of the largest fitting incidence graph padded to n, where
// a = floor((t+1)/2), b = ceil((t+1)/2).  Padding vertices join part Y.
BipartiteGraph construct_bipartite_bt_free(int t, int n);

// Parameters of the randomized construction for even t = 2s: a uniform
// floor(p*m)-subset A of the base vertices is expanded to s+1 copies
// (s copies outside A); edges become complete joins, except pairs inside A
// which lose the perfect matching of equal copy indices.
struct RandomEvenSpec {
    int s;
    Graph base;  // must be C4-free
    double p;
    uint64_t seed;

    RandomEvenSpec(int s, Graph base, double p, uint64_t seed);
};

struct RandomEvenResult {
    Graph graph;
    std::vector<int> a_set;        // chosen base vertices, sorted
    long long edges_meeting_a;     // base edges with an endpoint in A
};

RandomEvenResult construct_bt_free_random_even(const RandomEvenSpec& spec);

// argmax of f(p) = (s^2 + s(2p - p^2)) / (2 (s+p)^{3/2}) over [0,1];
// closed form sqrt(4s^2+5s+1) - 2s - 1, evaluated in cancellation-free form.
double optimal_p(int s);

// The objective the randomized construction optimizes.
double edge_coefficient_f(double p, int s);

// Largest prime q >= 2 with weight*(q^2+q+1) <= n, or -1 if none fits.
int largest_fitting_prime(long long weight, long long n);

}  // namespace bturan
