#include "bturan/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "bturan/rng.hpp"

namespace bturan {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

namespace {

using Triple = std::array<int, 3>;

// Canonical projective points over F_q in lexicographic order:
// (0,0,1), (0,1,*), (1,*,*).
std::vector<Triple> projective_points(int q) {
    std::vector<Triple> pts;
    pts.reserve(size_t(q) * q + q + 1);
    pts.push_back({0, 0, 1});
    for (int c = 0; c < q; ++c) pts.push_back({0, 1, c});
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) pts.push_back({1, b, c});
    return pts;
}

int dot_mod(const Triple& a, const Triple& b, int q) {
    long long s = 0;
    for (int i = 0; i < 3; ++i) s += (long long)a[i] * b[i];
    return int(s % q);
}

void require_prime(int q) {
    if (!is_prime(q))
        throw std::invalid_argument("unsupported parameter: q = " + std::to_string(q) +
                                    " is not prime");
}

Graph pad_to(const Graph& g, int n) {
    if (n < g.n()) throw std::invalid_argument("cannot pad to fewer vertices");
    if (n == g.n()) return g;
    return Graph::from_edges(n, g.edges());
}

}  // namespace

Graph er_polarity(int q) {
    require_prime(q);
    auto pts = projective_points(q);
    int n = int(pts.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dot_mod(pts[i], pts[j], q) == 0) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

BipartiteGraph pg_incidence(int q) {
    require_prime(q);
    auto pts = projective_points(q);
    int big = int(pts.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < big; ++i)
        for (int j = 0; j < big; ++j)
            if (dot_mod(pts[i], pts[j], q) == 0) edges.emplace_back(i, big + j);
    Graph g = Graph::from_edges(2 * big, edges);
    Bitset x(2 * big);
    for (int i = 0; i < big; ++i) x.set(i);
    return BipartiteGraph(std::move(g), std::move(x));
}

Graph blow_up(const Graph& base, int s) {
    if (s < 1) throw std::invalid_argument("block size must be >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(base.edge_count()) * s * s);
    for (auto [u, v] : base.edges())
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) edges.emplace_back(u * s + i, v * s + j);
    return Graph::from_edges(base.n() * s, edges);
}

BipartiteGraph bipartite_blow_up(const BipartiteGraph& base, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("block sizes must be >= 1");
    std::vector<int> xs = base.part_x().to_vector();
    std::vector<int> ys = base.part_y().to_vector();
    int n = a * int(xs.size()) + b * int(ys.size());
    // block start of each base vertex in the new layout
    std::vector<int> start(base.graph().n(), -1), width(base.graph().n(), 0);
    int at = 0;
    for (int v : xs) {
        start[v] = at;
        width[v] = a;
        at += a;
    }
    for (int v : ys) {
        start[v] = at;
        width[v] = b;
        at += b;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : base.graph().edges())
        for (int i = 0; i < width[u]; ++i)
            for (int j = 0; j < width[v]; ++j)
                edges.emplace_back(start[u] + i, start[v] + j);
    Graph g = Graph::from_edges(n, edges);
    Bitset x(n);
    for (int i = 0; i < a * int(xs.size()); ++i) x.set(i);
    return BipartiteGraph(std::move(g), std::move(x));
}

int largest_fitting_prime(long long weight, long long n) {
    int best = -1;
    for (int q = 2; weight * ((long long)q * q + q + 1) <= n; ++q)
        if (is_prime(q)) best = q;
    return best;
}

Graph construct_bt_free(int t, int n) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    int s = (t + 1) / 2;
    int q = largest_fitting_prime(s, n);
    if (q < 2)
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " too small to fit a q=2 base for t = " + std::to_string(t));
    return pad_to(blow_up(er_polarity(q), s), n);
}

BipartiteGraph construct_bipartite_bt_free(int t, int n) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    int a = (t + 1) / 2;
    int b = (t + 2) / 2;
    int q = largest_fitting_prime(a + b, n);
    if (q < 2)
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " too small to fit a q=2 base for t = " + std::to_string(t));
    BipartiteGraph blown = bipartite_blow_up(pg_incidence(q), a, b);
    if (blown.graph().n() == n) return blown;
    // padding joins part Y, appended past the existing layout
    Graph g = pad_to(blown.graph(), n);
    Bitset x(n);
    for (int i = 0; i < blown.nx(); ++i) x.set(i);
    return BipartiteGraph(std::move(g), std::move(x));
}

RandomEvenSpec::RandomEvenSpec(int s_, Graph base_, double p_, uint64_t seed_)
    : s(s_), base(std::move(base_)), p(p_), seed(seed_) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    if (!is_c4_free(base)) throw std::invalid_argument("base graph must be C4-free");
}

RandomEvenResult construct_bt_free_random_even(const RandomEvenSpec& spec) {
    const Graph& base = spec.base;
    int m = base.n();
    int s = spec.s;
    int asize = int(std::floor(spec.p * m));

    std::mt19937_64 rng(spec.seed);
    std::vector<int> a = draw_subset(rng, m, asize);
    std::sort(a.begin(), a.end());
    std::vector<char> in_a(m, 0);
    for (int v : a) in_a[v] = 1;

    std::vector<int> start(m), width(m);
    int at = 0;
    for (int v = 0; v < m; ++v) {
        start[v] = at;
        width[v] = s + (in_a[v] ? 1 : 0);
        at += width[v];
    }

    std::vector<std::pair<int, int>> edges;
    long long meeting = 0;
    for (auto [u, v] : base.edges()) {
        bool both = in_a[u] && in_a[v];
        if (in_a[u] || in_a[v]) ++meeting;
        for (int i = 0; i < width[u]; ++i)
            for (int j = 0; j < width[v]; ++j) {
                if (both && i == j) continue;  // drop the equal-index perfect matching
                edges.emplace_back(start[u] + i, start[v] + j);
            }
    }
    return {Graph::from_edges(at, edges), std::move(a), meeting};
}

double optimal_p(int s) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    double x = 4.0 * s * s + 5.0 * s + 1.0;
    // sqrt(x) - 2s - 1 without cancellation
    return double(s) / (std::sqrt(x) + 2.0 * s + 1.0);
}

double edge_coefficient_f(double p, int s) {
    return (double(s) * s + s * (2.0 * p - p * p)) / (2.0 * std::pow(double(s) + p, 1.5));
}

}  // namespace bturan
