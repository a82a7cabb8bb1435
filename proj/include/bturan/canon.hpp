#pragma once

#include <string>
#include <vector>

#include "bturan/graph.hpp"

namespace bturan {

// Exact canonical labeling for graphs on up to 64 vertices via equitable
// refinement plus individualization.  Equal forms <=> isomorphic (respecting
// initial colors, when given).
struct CanonResult {
    std::string form;        // n, color run, packed upper-triangle bits
    std::vector<int> order;  // order[i] = original vertex at canonical position i
};

CanonResult canonical_labeling(const Graph& g, const std::vector<int>& colors = {});

std::string canonical_form(const Graph& g);

// Colors X-vertices 0 and Y-vertices 1, so forms compare within a fixed
// bipartition shape (parts are not exchangeable).
std::string canonical_form_bipartite(const BipartiteGraph& g);

// The edge occupying the last set position of the canonical adjacency
// string, mapped back to original vertex ids; requires at least one edge.
std::pair<int, int> canonical_last_edge(const Graph& g, const CanonResult& canon);

}  // namespace bturan
