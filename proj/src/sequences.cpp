#include "pivots/sequences.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "pivots/errors.hpp"

namespace pivots {

namespace {

std::string describe(const Op& op) {
  if (const auto* p = std::get_if<PivotOp>(&op)) return "[" + p->u.str() + " " + p->v.str() + "]";
  return "[" + std::get<LocalCompOp>(op).u.str() + "]";
}

void check_well_formed(const Op& op) {
  if (const auto* p = std::get_if<PivotOp>(&op); p && p->u == p->v) {
    throw InputError("pivot " + describe(op) + " repeats its endpoint");
  }
}

std::vector<VertexId> touched(const Op& op) {
  if (const auto* p = std::get_if<PivotOp>(&op)) return {p->u, p->v};
  return {std::get<LocalCompOp>(op).u};
}

}  // namespace

OpSeq::OpSeq(std::vector<Op> ops) : ops_(std::move(ops)) {
  for (const auto& op : ops_) check_well_formed(op);
}

void OpSeq::push_back(Op op) {
  check_well_formed(op);
  ops_.push_back(std::move(op));
}

bool OpSeq::is_reduced() const {
  std::set<VertexId> seen;
  for (const auto& op : ops_) {
    for (const auto& v : touched(op)) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

VertexSet support(const OpSeq& seq) {
  VertexSet s;
  for (const auto& op : seq) {
    for (const auto& v : touched(op)) s.flip(v);
  }
  return s;
}

Graph apply_op(const Graph& g, const Op& op) {
  if (const auto* p = std::get_if<PivotOp>(&op)) return pivot(g, p->u, p->v);
  return loop_complement(g, std::get<LocalCompOp>(op).u);
}

namespace {

bool op_legal(const Graph& g, const Op& op) {
  if (const auto* p = std::get_if<PivotOp>(&op)) {
    const auto i = g.index_of(p->u);
    const auto j = g.index_of(p->v);
    return g.has_edge(i, j) && !g.has_loop(i) && !g.has_loop(j);
  }
  return g.has_loop(g.index_of(std::get<LocalCompOp>(op).u));
}

void check_vertices(const Graph& g, const OpSeq& seq) {
  for (const auto& op : seq) {
    for (const auto& v : touched(op)) g.index_of(v);
  }
}

}  // namespace

bool is_applicable(const Graph& g, const OpSeq& seq) {
  check_vertices(g, seq);
  Graph cur = g;
  for (const auto& op : seq) {
    if (!op_legal(cur, op)) return false;
    cur = apply_op(cur, op);
  }
  return true;
}

Graph apply(const Graph& g, const OpSeq& seq) {
  check_vertices(g, seq);
  Graph cur = g;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& op = seq.ops()[i];
    if (!op_legal(cur, op)) {
      throw NotApplicableError("operation " + std::to_string(i) + " " + describe(op) +
                                   " is not applicable",
                               i);
    }
    cur = apply_op(cur, op);
  }
  return cur;
}

bool is_support_applicable(const Graph& g, const VertexSet& s) {
  return principal_minor_det(g.adjacency(), g.adjacency().index_set(s));
}

Graph apply_support(const Graph& g, const VertexSet& s) {
  const auto& a = g.adjacency();
  IndexSet base = a.index_set(s);
  if (!principal_minor_det(a, base)) {
    throw NotApplicableError("det A[S] = 0: no applicable sequence has this support");
  }
  const auto n = g.size();
  std::vector<bool> diag(n);
  for (std::size_t x = 0; x < n; ++x) {
    base.flip(x);
    diag[x] = principal_minor_det(a, base);
    base.flip(x);
  }
  Graph out(g.vertices());
  for (std::size_t x = 0; x < n; ++x) {
    out.set_loop(x, diag[x]);
    base.flip(x);
    for (std::size_t y = x + 1; y < n; ++y) {
      base.flip(y);
      const bool minor = principal_minor_det(a, base);
      base.flip(y);
      out.set_edge(x, y, minor != (diag[x] && diag[y]));
    }
    base.flip(x);
  }
  return out;
}

OpSeq synthesize_reduced(const Graph& g, const VertexSet& s, const std::optional<VertexId>& anchor) {
  IndexSet remaining = g.adjacency().index_set(s);
  if (anchor && !s.contains(*anchor)) {
    throw InputError("anchor '" + anchor->str() + "' is not in the support set");
  }
  if (!principal_minor_det(g.adjacency(), remaining)) {
    throw NotApplicableError("det A[S] = 0: no applicable sequence has this support");
  }

  const auto n = g.size();
  const auto& names = g.vertices();
  Graph cur = g;
  OpSeq seq;
  std::optional<std::size_t> pinned;
  if (anchor) pinned = g.index_of(*anchor);

  auto emit = [&](Op op, std::initializer_list<std::size_t> used) {
    cur = apply_op(cur, op);
    for (auto i : used) remaining.reset(i);
    seq.push_back(std::move(op));
  };

  while (remaining.count() != 0) {
    if (const auto a = pinned.value_or(n); a < n) {
      pinned.reset();
      if (cur.has_loop(a)) {
        emit(LocalCompOp{names[a]}, {a});
        continue;
      }
      std::optional<std::size_t> partner;
      for (std::size_t j = 0; j < n && !partner; ++j) {
        if (remaining.test(j) && cur.has_edge(a, j) && !cur.has_loop(j)) partner = j;
      }
      if (!partner) {
        throw NotApplicableError("no applicable operation touches anchor '" + names[a].str() + "'");
      }
      const auto [lo, hi] = std::minmax(a, *partner);
      emit(PivotOp{names[lo], names[hi]}, {lo, hi});
      continue;
    }

    std::optional<std::size_t> looped;
    for (std::size_t i = 0; i < n && !looped; ++i) {
      if (remaining.test(i) && cur.has_loop(i)) looped = i;
    }
    if (looped) {
      emit(LocalCompOp{names[*looped]}, {*looped});
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> edge;
    for (std::size_t i = 0; i < n && !edge; ++i) {
      if (!remaining.test(i)) continue;
      for (std::size_t j = i + 1; j < n && !edge; ++j) {
        if (remaining.test(j) && cur.has_edge(i, j)) edge = std::pair{i, j};
      }
    }
    // det of the remaining block stays 1, so a loop or an edge always exists.
    if (!edge) throw std::logic_error("greedy synthesis stalled on a nonsingular block");
    emit(PivotOp{names[edge->first], names[edge->second]}, {edge->first, edge->second});
  }
  return seq;
}

std::optional<OpSeq> reduce_to_empty(const Graph& g) {
  if (!det(g.adjacency())) return std::nullopt;
  return synthesize_reduced(g, VertexSet(g.vertices().begin(), g.vertices().end()));
}

Graph replay_with_deletion(const Graph& g, const OpSeq& rules) {
  Graph cur = g;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const auto& op = rules.ops()[i];
    if (!op_legal(cur, op)) {
      throw NotApplicableError("rule " + std::to_string(i) + " " + describe(op) +
                                   " is not applicable",
                               i);
    }
    const auto used = touched(op);
    cur = delete_vertices(apply_op(cur, op), VertexSet(used.begin(), used.end()));
  }
  return cur;
}

namespace {

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.size() > cap) {
    throw UnsupportedError(std::string(what) + ": " + std::to_string(g.size()) +
                           " vertices exceeds the cap of " + std::to_string(cap));
  }
  if (g.size() >= 63) throw UnsupportedError(std::string(what) + ": subset space too large");
}

// Runs body(first, last) over [0, total) split into contiguous chunks.
template <typename Body>
void parallel_chunks(std::uint64_t total, unsigned threads, Body&& body) {
  threads = std::max(1U, threads);
  if (threads == 1 || total < 1024) {
    body(0, total, 0U);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t first = std::min(total, t * chunk);
    const std::uint64_t last = std::min(total, first + chunk);
    pool.emplace_back([&body, first, last, t] { body(first, last, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<Graph> orbit(const Graph& g, EnumerationOptions options) {
  check_cap(g, options.max_vertices, "orbit");
  const std::uint64_t total = std::uint64_t{1} << g.size();
  const unsigned threads = std::max(1U, options.threads);
  std::vector<std::set<Graph>> partial(threads);
  parallel_chunks(total, threads, [&](std::uint64_t first, std::uint64_t last, unsigned t) {
    for (std::uint64_t bits = first; bits < last; ++bits) {
      const Word w = bits;
      if (!principal_minor_det(g.adjacency(), std::span<const Word>(&w, g.size() ? 1 : 0))) {
        continue;
      }
      VertexSet s;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if ((bits >> i) & 1U) s.insert(g.vertices()[i]);
      }
      partial[t].insert(apply_support(g, s));
    }
  });
  std::set<Graph> merged;
  for (auto& p : partial) merged.merge(p);
  return {merged.begin(), merged.end()};
}

std::uint64_t count_applicable_supports(const Graph& g, EnumerationOptions options) {
  check_cap(g, options.max_vertices, "count_applicable_supports");
  if (g.size() == 0) return 1;
  const std::uint64_t total = std::uint64_t{1} << g.size();
  const unsigned threads = std::max(1U, options.threads);
  std::vector<std::uint64_t> partial(threads, 0);
  parallel_chunks(total, threads, [&](std::uint64_t first, std::uint64_t last, unsigned t) {
    std::uint64_t c = 0;
    for (std::uint64_t bits = first; bits < last; ++bits) {
      const Word w = bits;
      c += principal_minor_det(g.adjacency(), std::span<const Word>(&w, 1));
    }
    partial[t] = c;
  });
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

bool check_commutation(const Graph& g, const VertexId& u, const VertexId& v, const VertexId& w,
                       const VertexId& z) {
  const std::set<VertexId> distinct{u, v, w, z};
  if (distinct.size() != 4) throw InputError("commutation check needs four distinct vertices");
  for (const auto& x : distinct) {
    if (g.has_loop(x)) throw InputError("commutation check needs loop-free vertices");
  }
  if (!g.has_edge(u, v) || !g.has_edge(w, z)) {
    throw InputError("commutation check needs uv and wz to be edges");
  }
  const OpSeq first({PivotOp{u, v}, PivotOp{w, z}});
  const OpSeq second({PivotOp{w, z}, PivotOp{u, v}});
  return is_applicable(g, first) && is_applicable(g, second);
}

}  // namespace pivots
