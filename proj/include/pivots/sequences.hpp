#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pivots/graph.hpp"
#include "pivots/vertex.hpp"

namespace pivots {

struct PivotOp {
  VertexId u;
  VertexId v;
  friend bool operator==(const PivotOp&, const PivotOp&) = default;
};

struct LocalCompOp {
  VertexId u;
  friend bool operator==(const LocalCompOp&, const LocalCompOp&) = default;
};

using Op = std::variant<PivotOp, LocalCompOp>;

// Ordered list of pivots [u v] and local complementations [u].
class OpSeq {
 public:
  OpSeq() = default;
  // Throws InputError when a pivot repeats its endpoint.
  explicit OpSeq(std::vector<Op> ops);

  void push_back(Op op);
  const std::vector<Op>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }
  auto begin() const { return ops_.begin(); }
  auto end() const { return ops_.end(); }

  // No vertex occurs in more than one operation.
  bool is_reduced() const;

  friend bool operator==(const OpSeq&, const OpSeq&) = default;

 private:
  std::vector<Op> ops_;
};

// Vertices occurring an odd number of times across all operations.
VertexSet support(const OpSeq& seq);

Graph apply_op(const Graph& g, const Op& op);

// Left-to-right simulation: a pivot needs a current edge with loop-free
// endpoints, a local complementation a currently looped vertex. Unknown
// vertices raise InputError.
bool is_applicable(const Graph& g, const OpSeq& seq);

// Throws NotApplicableError carrying the index of the first failing op.
Graph apply(const Graph& g, const OpSeq& seq);

// The graph reached by any applicable sequence with support S, read off
// principal minors:
//   b_xx = det A[S + {x}],  b_xy = det A[S + {x,y}] xor (b_xx and b_yy)
// with + the symmetric difference. Throws NotApplicableError if det A[S] = 0.
Graph apply_support(const Graph& g, const VertexSet& s);

bool is_support_applicable(const Graph& g, const VertexSet& s);

// Greedy reduced sequence with support S: repeatedly take the smallest
// looped vertex of the remaining support, else the smallest edge inside it,
// apply it and drop its vertices. With an anchor the first operation is
// chosen among those touching the anchor.
OpSeq synthesize_reduced(const Graph& g, const VertexSet& s,
                         const std::optional<VertexId>& anchor = std::nullopt);

// Signed-graph reduction: a reduced sequence with support V(G) read as
// positive rules [u] and double rules [u v]; nullopt when det A(G) = 0.
std::optional<OpSeq> reduce_to_empty(const Graph& g);

// Replays rules in order, deleting the vertices of each rule after applying
// it. Returns what is left.
Graph replay_with_deletion(const Graph& g, const OpSeq& rules);

struct EnumerationOptions {
  std::size_t max_vertices;
  unsigned threads = 1;
};

inline constexpr std::size_t kDefaultOrbitCap = 12;
inline constexpr std::size_t kDefaultCountCap = 24;

// Every graph reachable by an applicable sequence, sorted, without duplicates
// (labelled equality). Includes g itself.
std::vector<Graph> orbit(const Graph& g, EnumerationOptions options = {kDefaultOrbitCap});

// |{S subset of V : det A[S] = 1}|, the empty set included.
std::uint64_t count_applicable_supports(const Graph& g,
                                        EnumerationOptions options = {kDefaultCountCap});

// Whether both [uv][wz] and [wz][uv] are applicable. Requires uv and wz to
// be edges on four distinct loop-free vertices (InputError otherwise).
bool check_commutation(const Graph& g, const VertexId& u, const VertexId& v, const VertexId& w,
                       const VertexId& z);

}  // namespace pivots
