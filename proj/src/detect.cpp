#include "bturan/detect.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

namespace bturan {

bool validate_certificate(const Graph& g, const BtCertificate& cert) {
    auto [u, v] = cert.shared_edge;
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.has_edge(u, v)) return false;
    std::vector<int> seen{u, v};
    for (auto [x, y] : cert.legs) {
        if (x < 0 || y < 0 || x >= g.n() || y >= g.n()) return false;
        if (!g.has_edge(u, x) || !g.has_edge(x, y) || !g.has_edge(y, v)) return false;
        seen.push_back(x);
        seen.push_back(y);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

AuxGraph make_aux_graph(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("aux graph requires an edge uv");
    Bitset side_u = g.neighbors(u);
    side_u.reset(v);
    Bitset side_v = g.neighbors(v);
    side_v.reset(u);

    Bitset support = side_u | side_v;
    std::vector<int> verts = support.to_vector();
    std::vector<int> map(g.n(), -1);
    for (size_t i = 0; i < verts.size(); ++i) map[verts[i]] = int(i);

    std::vector<std::pair<int, int>> edges;
    for (int x : verts) {
        // qualifying partners of x, scanning only ids above x keeps each edge once
        Bitset partners(g.n());
        if (side_u.test(x)) partners |= g.neighbors(x) & side_v;
        if (side_v.test(x)) partners |= g.neighbors(x) & side_u;
        for (int y = partners.next(x); y != -1; y = partners.next(y))
            edges.emplace_back(map[x], map[y]);
    }
    return AuxGraph{Graph::from_edges(int(verts.size()), edges), std::move(verts),
                    std::move(side_u), std::move(side_v)};
}

Graph aux_graph(const Graph& g, int u, int v) { return make_aux_graph(g, u, v).graph; }

namespace {

int greedy_matching(const Graph& h, int cap) {
    Bitset used(h.n());
    int got = 0;
    for (int v = 0; v < h.n() && got < cap; ++v) {
        if (used.test(v)) continue;
        Bitset cand = h.neighbors(v);
        cand.subtract(used);
        int w = cand.first();
        if (w != -1) {
            used.set(v);
            used.set(w);
            ++got;
        }
    }
    return got;
}

int matching_rec(const Graph& h, Bitset& alive, int have, int cap, int best) {
    if (have >= cap) return have;
    // pick the alive vertex of minimum positive alive-degree
    int pick = -1, pick_deg = h.n() + 1;
    int live_deg_vertices = 0;
    for (int v = alive.first(); v != -1; v = alive.next(v)) {
        int d = h.neighbors(v).and_count(alive);
        if (d == 0) continue;
        ++live_deg_vertices;
        if (d < pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }
    if (pick == -1) return have;
    if (have + live_deg_vertices / 2 <= best) return have;  // cannot beat incumbent

    int out = have;
    Bitset cand = h.neighbors(pick) & alive;
    alive.reset(pick);
    for (int w = cand.first(); w != -1; w = cand.next(w)) {
        alive.reset(w);
        out = std::max(out, matching_rec(h, alive, have + 1, cap, std::max(best, out)));
        alive.set(w);
        if (out >= cap) break;
    }
    // leaving pick unmatched can only help when it has >= 2 choices
    if (out < cap && pick_deg >= 2)
        out = std::max(out, matching_rec(h, alive, have, cap, std::max(best, out)));
    alive.set(pick);
    return out;
}

}  // namespace

int max_matching_size(const Graph& h, int cap) {
    if (cap < 0) throw std::invalid_argument("cap must be >= 0");
    if (cap == 0) return 0;
    int lb = greedy_matching(h, cap);
    if (lb >= cap) return cap;
    Bitset alive = Bitset::full(h.n());
    return matching_rec(h, alive, 0, cap, lb - 1 >= 0 ? lb - 1 : 0);
}

std::optional<std::vector<std::pair<int, int>>> lex_min_matching(const Graph& h, int size) {
    if (size == 0) return std::vector<std::pair<int, int>>{};
    if (max_matching_size(h, size) < size) return std::nullopt;
    std::vector<std::pair<int, int>> out;
    Graph cur = h;
    for (int need = size; need > 0; --need) {
        bool found = false;
        for (auto [a, b] : cur.edges()) {
            // feasibility of completing with the endpoints removed
            std::vector<std::pair<int, int>> es;
            for (auto [x, y] : cur.edges())
                if (x != a && x != b && y != a && y != b) es.emplace_back(x, y);
            Graph rest = Graph::from_edges(cur.n(), es);
            if (max_matching_size(rest, need - 1) >= need - 1) {
                out.emplace_back(a, b);
                cur = rest;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;  // unreachable given the feasibility precheck
    }
    return out;
}

namespace {

std::optional<BtCertificate> certificate_via_edge(const Graph& g, int u, int v, int t) {
    AuxGraph aux = make_aux_graph(g, u, v);
    if (max_matching_size(aux.graph, t) < t) return std::nullopt;
    auto matching = lex_min_matching(aux.graph, t);
    if (!matching) return std::nullopt;
    BtCertificate cert;
    cert.shared_edge = {u, v};
    for (auto [i, j] : *matching) {
        int a = aux.vertices[i], b = aux.vertices[j];
        // orient so the first endpoint lies in N(u)\{v}, the second in N(v)\{u}
        if (aux.side_u.test(a) && aux.side_v.test(b))
            cert.legs.emplace_back(a, b);
        else
            cert.legs.emplace_back(b, a);
    }
    return cert;
}

}  // namespace

std::optional<BtCertificate> contains_bt(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    for (auto [u, v] : g.edges()) {
        auto cert = certificate_via_edge(g, u, v, t);
        if (cert) return cert;
    }
    return std::nullopt;
}

std::optional<BtCertificate> contains_bt_through(const Graph& g, int t,
                                                 const std::vector<std::pair<int, int>>& shared) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    for (auto [u, v] : shared) {
        if (!g.has_edge(u, v)) continue;
        auto cert = certificate_via_edge(g, u, v, t);
        if (cert) return cert;
    }
    return std::nullopt;
}

namespace {

bool oracle_extend(const Graph& g, int u, int v, int t, int done, Bitset& used, int min_x) {
    if (done == t) return true;
    const Bitset& nu = g.neighbors(u);
    for (int x = nu.next(min_x); x != -1; x = nu.next(x)) {
        if (used.test(x)) continue;
        Bitset ys = g.neighbors(x) & g.neighbors(v);
        ys.subtract(used);
        for (int y = ys.first(); y != -1; y = ys.next(y)) {
            if (y == x) continue;
            used.set(x);
            used.set(y);
            if (oracle_extend(g, u, v, t, done + 1, used, x)) return true;
            used.reset(x);
            used.reset(y);
        }
    }
    return false;
}

}  // namespace

bool contains_bt_oracle(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (g.n() > 16)
        std::cerr << "contains_bt_oracle: warning: brute force on " << g.n()
                  << " vertices may be slow\n";
    for (auto [u, v] : g.edges()) {
        Bitset used(g.n());
        used.set(u);
        used.set(v);
        // legs ordered by increasing u-side vertex to kill permutation symmetry;
        // every C4 through uv writes as u-x-y-v with x in N(u), y in N(v)
        if (oracle_extend(g, u, v, t, 0, used, -1)) return true;
    }
    return false;
}

bool contains_spider(const Graph& g, int v, int t) {
    if (t < 1) return true;
    const Bitset& nv = g.neighbors(v);
    for (int u = nv.first(); u != -1; u = nv.next(u)) {
        // legs are independent edges of G[N(v)\{u}] touching N(u)
        Bitset scope = nv;
        scope.reset(u);
        std::vector<int> verts = scope.to_vector();
        std::vector<int> map(g.n(), -1);
        for (size_t i = 0; i < verts.size(); ++i) map[verts[i]] = int(i);
        std::vector<std::pair<int, int>> edges;
        for (int a : verts) {
            Bitset row = g.neighbors(a) & scope;
            for (int b = row.next(a); b != -1; b = row.next(b))
                if (g.has_edge(u, a) || g.has_edge(u, b)) edges.emplace_back(map[a], map[b]);
        }
        Graph h = Graph::from_edges(int(verts.size()), edges);
        if (max_matching_size(h, t) >= t) return true;
    }
    return false;
}

}  // namespace bturan
