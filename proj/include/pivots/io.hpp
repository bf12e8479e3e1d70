#pragma once

#include <string>
#include <string_view>

#include "pivots/graph.hpp"
#include "pivots/sequences.hpp"

namespace pivots {

enum class GraphFormat { EdgeList, Graph6 };

struct GraphDocument {
  GraphFormat format = GraphFormat::EdgeList;
  std::string payload;
};

// Edge-list grammar, one record per line, '#' starts a comment:
//   u v        edge
//   loop v     self-loop
//   vertex v   vertex declaration
// Repeated edges or loops are errors. Errors are InputError naming the line.
Graph parse_edge_list(std::string_view text);

// Standard graph6 (optional ">>graph6<<" header); vertices are 0..n-1.
Graph parse_graph6(std::string_view text);

Graph parse_graph(const GraphDocument& doc);

// Canonical edge-list: `vertex` lines for vertices with no edge and no loop,
// then `loop` lines, then `u v` lines with u < v, each group sorted.
std::string serialize_graph(const Graph& g);

// "[u v][w]": two tokens make a pivot, one a local complementation.
OpSeq parse_sequence(std::string_view text);
std::string format_sequence(const OpSeq& seq);

// Comma-separated vertex ids; the empty string is the empty set.
VertexSet parse_vertex_set(std::string_view text);
std::string format_vertex_set(const VertexSet& s);

}  // namespace pivots
