#include "pivots/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "pivots/errors.hpp"

namespace pivots {

Graph::Graph(std::vector<VertexId> vertices, std::span<const Edge> edges,
             std::span<const VertexId> loops) {
  std::sort(vertices.begin(), vertices.end());
  adj_ = Gf2Matrix(std::move(vertices));
  for (const auto& [a, b] : edges) {
    const auto i = adj_.index_of(a);
    const auto j = adj_.index_of(b);
    if (i == j) throw InputError("self-edge '" + a.str() + "'; declare a loop instead");
    if (adj_.entry(i, j)) throw InputError("duplicate edge " + a.str() + " " + b.str());
    adj_.set_entry(i, j, true);
  }
  for (const auto& v : loops) {
    const auto i = adj_.index_of(v);
    if (adj_.entry(i, i)) throw InputError("duplicate loop at '" + v.str() + "'");
    adj_.set_entry(i, i, true);
  }
}

Graph Graph::from_matrix(const Gf2Matrix& adjacency) {
  if (!adjacency.is_symmetric()) throw InputError("adjacency matrix is not symmetric");
  Graph g;
  if (std::is_sorted(adjacency.labels().begin(), adjacency.labels().end())) {
    g.adj_ = adjacency;
    return g;
  }
  auto sorted = adjacency.labels();
  std::sort(sorted.begin(), sorted.end());
  g.adj_ = Gf2Matrix(sorted);
  const auto n = sorted.size();
  std::vector<std::size_t> from(n);
  for (std::size_t i = 0; i < n; ++i) from[i] = adjacency.index_of(sorted[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (adjacency.entry(from[i], from[j])) g.adj_.set_entry(i, j, true);
    }
  }
  return g;
}

bool Graph::has_edge(const VertexId& a, const VertexId& b) const {
  return has_edge(index_of(a), index_of(b));
}

bool Graph::is_simple() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (has_loop(i)) return false;
  }
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  const auto& vs = vertices();
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (adj_.entry(i, j)) out.emplace_back(vs[i], vs[j]);
    }
  }
  return out;
}

std::vector<VertexId> Graph::loops() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (has_loop(i)) out.push_back(vertices()[i]);
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) c += adj_.entry(i, j);
  }
  return c;
}

VertexSet Graph::neighbours(const VertexId& v) const {
  const auto i = index_of(v);
  VertexSet out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (has_edge(i, j)) out.insert(vertices()[j]);
  }
  return out;
}

void Graph::set_edge(std::size_t i, std::size_t j, bool present) {
  if (i == j) throw InputError("set_edge on a single vertex; use set_loop");
  adj_.set_entry(i, j, present);
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
  if (auto c = std::lexicographical_compare_three_way(a.vertices().begin(), a.vertices().end(),
                                                      b.vertices().begin(), b.vertices().end());
      c != 0) {
    return c;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ra = a.adjacency().row(i);
    const auto rb = b.adjacency().row(i);
    if (auto c = std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(), rb.end());
        c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

namespace {

void require_simple(const Graph& g, const char* op) {
  if (!g.is_simple()) {
    throw InputError(std::string(op) + " is defined on simple graphs only; graph has loops");
  }
}

// Open neighbourhood of row u as packed words.
std::vector<Word> open_neighbourhood(const Gf2Matrix& a, std::size_t u) {
  const auto r = a.row(u);
  std::vector<Word> n(r.begin(), r.end());
  n[u / kWordBits] &= ~(Word{1} << (u % kWordBits));
  return n;
}

template <typename Fn>
void for_each_bit(std::span<const Word> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (Word bits = words[w]; bits != 0; bits &= bits - 1) {
      fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
}

// Toggles every pair inside N(u); with keep_diagonal the loop bits of the
// neighbours are restored afterwards.
Graph complement_neighbourhood(const Graph& g, std::size_t u, bool keep_diagonal) {
  Gf2Matrix a = g.adjacency();
  const auto n = open_neighbourhood(a, u);
  for_each_bit(n, [&](std::size_t x) {
    auto row = a.mutable_row(x);
    for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= n[w];
    if (keep_diagonal) a.flip_entry(x, x);
  });
  return Graph::from_matrix(a);
}

}  // namespace

bool sim(const Graph& g, const VertexId& x, const VertexId& y) {
  require_simple(g, "sim");
  const auto i = g.index_of(x);
  const auto j = g.index_of(y);
  return i == j || g.has_edge(i, j);
}

Graph local_complement(const Graph& g, const VertexId& u) {
  const auto i = g.index_of(u);
  require_simple(g, "local complementation");
  return complement_neighbourhood(g, i, /*keep_diagonal=*/true);
}

Graph loop_complement(const Graph& g, const VertexId& u) {
  const auto i = g.index_of(u);
  if (!g.has_loop(i)) {
    throw NotApplicableError("local complementation at '" + u.str() + "' requires a loop");
  }
  return complement_neighbourhood(g, i, /*keep_diagonal=*/false);
}

Graph pivot(const Graph& g, const VertexId& u, const VertexId& v) {
  const auto iu = g.index_of(u);
  const auto iv = g.index_of(v);
  if (!g.has_edge(iu, iv)) {
    throw NotApplicableError("pivot " + u.str() + " " + v.str() + ": not an edge");
  }
  if (g.has_loop(iu) || g.has_loop(iv)) {
    throw NotApplicableError("pivot " + u.str() + " " + v.str() + ": endpoint has a loop");
  }
  Gf2Matrix a = g.adjacency();
  const auto stride = a.row_words();
  std::vector<Word> nu(a.row(iu).begin(), a.row(iu).end());
  std::vector<Word> nv(a.row(iv).begin(), a.row(iv).end());
  nu[iu / kWordBits] |= Word{1} << (iu % kWordBits);
  nv[iv / kWordBits] |= Word{1} << (iv % kWordBits);

  std::vector<Word> v1(stride), v2(stride), v3(stride);
  for (std::size_t w = 0; w < stride; ++w) {
    v1[w] = nu[w] & ~nv[w];
    v2[w] = nv[w] & ~nu[w];
    v3[w] = nu[w] & nv[w];
  }
  auto toggle_rows = [&](const std::vector<Word>& cls, const std::vector<Word>& x,
                         const std::vector<Word>& y) {
    for_each_bit(cls, [&](std::size_t r) {
      auto row = a.mutable_row(r);
      for (std::size_t w = 0; w < stride; ++w) row[w] ^= x[w] | y[w];
    });
  };
  toggle_rows(v1, v2, v3);
  toggle_rows(v2, v1, v3);
  toggle_rows(v3, v1, v2);
  return Graph::from_matrix(a);
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  return Graph::from_matrix(principal_submatrix(g.adjacency(), x));
}

Graph delete_vertices(const Graph& g, const VertexSet& x) {
  VertexSet keep;
  for (const auto& v : x) g.index_of(v);
  for (const auto& v : g.vertices()) {
    if (!x.contains(v)) keep.insert(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<std::string> split_word(const std::string& word) {
  std::istringstream in(word);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

Graph overlap_graph(std::span<const std::string> word) {
  std::map<std::string, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < word.size(); ++i) positions[word[i]].push_back(i);
  for (const auto& [sym, pos] : positions) {
    if (pos.size() != 2) {
      throw InputError("symbol '" + sym + "' occurs " + std::to_string(pos.size()) +
                       " times; expected exactly 2");
    }
  }
  std::vector<VertexId> vertices;
  for (const auto& [sym, pos] : positions) vertices.emplace_back(sym);
  std::vector<Edge> edges;
  for (auto x = positions.begin(); x != positions.end(); ++x) {
    const auto [a, b] = std::pair{x->second[0], x->second[1]};
    for (auto y = std::next(x); y != positions.end(); ++y) {
      const auto inside = static_cast<int>(a < y->second[0] && y->second[0] < b) +
                          static_cast<int>(a < y->second[1] && y->second[1] < b);
      if (inside == 1) edges.emplace_back(x->first, y->first);
    }
  }
  return Graph(std::move(vertices), edges);
}

Graph overlap_graph(const std::string& word) {
  const auto symbols = split_word(word);
  return overlap_graph(std::span<const std::string>(symbols));
}

bool is_isomorphic_small(const Graph& g, const Graph& h) {
  if (g.size() > 8 || h.size() > 8) {
    throw UnsupportedError("is_isomorphic_small supports at most 8 vertices");
  }
  if (g.size() != h.size()) return false;
  if (g.edge_count() != h.edge_count() || g.loops().size() != h.loops().size()) return false;
  const auto n = g.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i; j < n && ok; ++j) {
        ok = g.adjacency().entry(i, j) == h.adjacency().entry(perm[i], perm[j]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

std::vector<VertexId> numbered(std::size_t n) {
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < n; ++i) vs.emplace_back(static_cast<std::int64_t>(i));
  return vs;
}

}  // namespace

Graph edgeless_graph(std::size_t n) { return Graph(numbered(n)); }

Graph complete_graph(std::size_t n) {
  Graph g(numbered(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j, true);
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(numbered(n));
  for (std::size_t i = 0; n >= 3 && i < n; ++i) g.set_edge(i, (i + 1) % n, true);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(numbered(n));
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1, true);
  return g;
}

}  // namespace pivots
