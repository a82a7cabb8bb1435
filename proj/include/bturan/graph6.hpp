#pragma once

#include <stdexcept>
#include <string>

#include "bturan/graph.hpp"

namespace bturan {

struct g6_parse_error : std::runtime_error {
    g6_parse_error(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (byte offset " + std::to_string(offset) + ")"),
          offset(offset) {}
    size_t offset;
};

// Standard graph6 encoding: N(n) followed by the upper-triangle bits in
// column order, 6 bits per byte, each byte offset by 63.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& s);

// Standard sparse6 encoding (':' prefix).  Loops and repeated edges are
// rejected on decode since Graph is simple.
std::string encode_sparse6(const Graph& g);
Graph decode_sparse6(const std::string& s);

// Dispatches on the ':' prefix.
Graph decode_graph(const std::string& s);

// Bipartite graphs serialize as a sidecar header line `bip <|X|> <|Y|>`
// followed by the graph6 line, with X occupying indices 0..|X|-1.
// Graphs whose X part is scattered are relabeled (X ascending, then Y).
std::string encode_bipartite(const BipartiteGraph& g);
BipartiteGraph decode_bipartite(const std::string& header, const std::string& g6);

}  // namespace bturan
