#include "bturan/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace bturan {

namespace {

struct Engine {
    int n;
    std::vector<uint64_t> rows;
    std::vector<int> init_color;

    std::string best;
    std::vector<int> best_order;
    bool have_best = false;

    using Cells = std::vector<std::vector<int>>;

    // 1-dimensional Weisfeiler-Leman refinement; subcells are ordered by
    // signature value so the cell order never depends on vertex labels
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t ci = 0; ci < cells.size(); ++ci) {
                if (cells[ci].size() <= 1) continue;
                std::map<std::vector<int>, std::vector<int>> split;
                for (int v : cells[ci]) {
                    std::vector<int> sig;
                    sig.reserve(cells.size());
                    for (auto& cell : cells) {
                        int cnt = 0;
                        for (int w : cell) cnt += int((rows[v] >> w) & 1);
                        sig.push_back(cnt);
                    }
                    split[std::move(sig)].push_back(v);
                }
                if (split.size() <= 1) continue;
                Cells next;
                next.reserve(cells.size() + split.size());
                for (size_t cj = 0; cj < cells.size(); ++cj) {
                    if (cj != ci) {
                        next.push_back(std::move(cells[cj]));
                    } else {
                        for (auto& [sig, members] : split) next.push_back(members);
                    }
                }
                cells = std::move(next);
                changed = true;
                break;
            }
        }
    }

    // A cell whose vertices have identical neighborhoods outside the cell and
    // an empty or complete inside may be ordered arbitrarily; ascending index
    // then yields the same encoding on every branch.
    bool interchangeable(const std::vector<int>& cell) const {
        if (cell.size() <= 1) return true;
        uint64_t inside = 0;
        for (int v : cell) inside |= uint64_t{1} << v;
        uint64_t outside0 = rows[cell[0]] & ~inside;
        int deg_in0 = std::popcount(rows[cell[0]] & inside);
        bool empty_in = deg_in0 == 0;
        bool full_in = deg_in0 == int(cell.size()) - 1;
        if (!empty_in && !full_in) return false;
        for (int v : cell) {
            if ((rows[v] & ~inside) != outside0) return false;
            int di = std::popcount(rows[v] & inside);
            if (empty_in ? di != 0 : di != int(cell.size()) - 1) return false;
        }
        return true;
    }

    std::string encode(const std::vector<int>& order) const {
        std::string s;
        s.reserve(2 + size_t(n) + size_t(n) * n / 8 + 1);
        s.push_back(char(n));
        for (int i = 0; i < n; ++i) s.push_back(char(init_color[order[i]]));
        int acc = 0, used = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                acc = (acc << 1) | int((rows[order[i]] >> order[j]) & 1);
                if (++used == 8) {
                    s.push_back(char(acc));
                    acc = used = 0;
                }
            }
        if (used) s.push_back(char(acc << (8 - used)));
        return s;
    }

    void leaf(const Cells& cells) {
        std::vector<int> order;
        order.reserve(n);
        for (auto& cell : cells) {
            std::vector<int> sorted = cell;
            std::sort(sorted.begin(), sorted.end());
            order.insert(order.end(), sorted.begin(), sorted.end());
        }
        std::string s = encode(order);
        if (!have_best || s < best) {
            best = std::move(s);
            best_order = std::move(order);
            have_best = true;
        }
    }

    void descend(Cells cells) {
        refine(cells);
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() > 1 && !interchangeable(cells[i])) {
                target = i;
                break;
            }
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> branch = cells[target];
        std::sort(branch.begin(), branch.end());
        for (int v : branch) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                } else {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : cells[i])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                }
            }
            descend(std::move(child));
        }
    }
};

}  // namespace

CanonResult canonical_labeling(const Graph& g, const std::vector<int>& colors) {
    if (g.n() > 64) throw std::invalid_argument("canonical form supports up to 64 vertices");
    Engine eng;
    eng.n = g.n();
    eng.rows.assign(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        eng.rows[u] |= uint64_t{1} << v;
        eng.rows[v] |= uint64_t{1} << u;
    }
    eng.init_color = colors.empty() ? std::vector<int>(g.n(), 0) : colors;
    if (int(eng.init_color.size()) != g.n())
        throw std::invalid_argument("color vector size mismatch");

    if (g.n() == 0) return {std::string(1, '\0'), {}};

    // initial cells grouped by color, ascending
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < g.n(); ++v) by_color[eng.init_color[v]].push_back(v);
    Engine::Cells cells;
    for (auto& [c, members] : by_color) cells.push_back(members);

    eng.descend(std::move(cells));
    return {std::move(eng.best), std::move(eng.best_order)};
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::string canonical_form_bipartite(const BipartiteGraph& g) {
    std::vector<int> colors(g.graph().n(), 1);
    g.part_x().for_each([&](int v) { colors[v] = 0; });
    return canonical_labeling(g.graph(), colors).form;
}

std::pair<int, int> canonical_last_edge(const Graph& g, const CanonResult& canon) {
    if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");
    const auto& order = canon.order;
    // last set position of the row-major upper-triangle sequence
    int bi = -1, bj = -1;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.has_edge(order[i], order[j])) {
                bi = i;
                bj = j;
            }
    return {order[bi], order[bj]};
}

}  // namespace bturan
