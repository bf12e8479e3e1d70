#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pivots/gf2.hpp"
#include "pivots/vertex.hpp"

namespace pivots {

using Edge = std::pair<VertexId, VertexId>;

// Undirected graph without parallel edges, optionally with self-loops.
// Vertices are kept sorted by VertexId; the adjacency matrix diagonal holds
// the loops.
class Graph {
 public:
  Graph() = default;
  // Throws InputError on duplicate vertices, unknown endpoints, self-edges
  // (use loops) or repeated edges/loops.
  explicit Graph(std::vector<VertexId> vertices, std::span<const Edge> edges = {},
                 std::span<const VertexId> loops = {});
  // Adopts a symmetric matrix; labels are re-sorted if needed.
  static Graph from_matrix(const Gf2Matrix& adjacency);

  std::size_t size() const noexcept { return adj_.order(); }
  const std::vector<VertexId>& vertices() const noexcept { return adj_.labels(); }
  const Gf2Matrix& adjacency() const noexcept { return adj_; }
  std::size_t index_of(const VertexId& v) const { return adj_.index_of(v); }
  bool contains(const VertexId& v) const { return adj_.find(v).has_value(); }

  bool has_edge(std::size_t i, std::size_t j) const { return i != j && adj_.entry(i, j); }
  bool has_edge(const VertexId& a, const VertexId& b) const;
  bool has_loop(std::size_t i) const { return adj_.entry(i, i); }
  bool has_loop(const VertexId& v) const { return has_loop(index_of(v)); }
  // Raw adjacency-matrix entry; the diagonal is the loop bit.
  bool adj_entry(const VertexId& a, const VertexId& b) const { return adj_.entry(a, b); }
  bool is_simple() const;

  std::vector<Edge> edges() const;
  std::vector<VertexId> loops() const;
  std::size_t edge_count() const;
  VertexSet neighbours(const VertexId& v) const;

  // Mutators keep the adjacency symmetric. Self-pairs are rejected by
  // set_edge; use set_loop.
  void set_edge(std::size_t i, std::size_t j, bool present);
  void set_loop(std::size_t i, bool present) { adj_.set_entry(i, i, present); }

  friend bool operator==(const Graph&, const Graph&) = default;
  // Total order for canonical sorted containers: vertex lists first, then
  // adjacency rows.
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b);

 private:
  Gf2Matrix adj_;
};

// x ~ y: an edge or x == y. Simple graphs only (InputError otherwise).
bool sim(const Graph& g, const VertexId& x, const VertexId& y);

// G*u on a simple graph: complement the edges inside N(u).
Graph local_complement(const Graph& g, const VertexId& u);

// G*u for a looped vertex u: the graph of ppt(A(G), {u}). Complements N(u)
// and toggles the loop of every neighbour; u keeps its loop.
Graph loop_complement(const Graph& g, const VertexId& u);

// G[uv]: toggle every pair between different classes of
//   V1 = N'(u) \ N'(v),  V2 = N'(v) \ N'(u),  V3 = N'(u) & N'(v)
// where N' is the closed neighbourhood. u and v stay in V3 (no swap).
// Requires uv to be an edge and both endpoints loop-free; loops are kept.
Graph pivot(const Graph& g, const VertexId& u, const VertexId& v);

Graph induced_subgraph(const Graph& g, const VertexSet& x);

// Removes the given vertices.
Graph delete_vertices(const Graph& g, const VertexSet& x);

// Parses a whitespace-separated double-occurrence word.
std::vector<std::string> split_word(const std::string& word);

// Overlap (circle) graph: xy is an edge iff exactly one occurrence of y lies
// between the two occurrences of x. Every symbol must occur exactly twice.
Graph overlap_graph(std::span<const std::string> word);
Graph overlap_graph(const std::string& word);

// Brute force over all vertex bijections, edges and loops both preserved.
// Throws UnsupportedError above 8 vertices.
bool is_isomorphic_small(const Graph& g, const Graph& h);

// Named small graphs on vertices 0..n-1.
Graph edgeless_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

}  // namespace pivots
