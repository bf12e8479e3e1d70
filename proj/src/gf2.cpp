#include "pivots/gf2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "pivots/errors.hpp"

namespace pivots {

IndexSet::IndexSet(std::size_t size, std::initializer_list<std::size_t> members) : IndexSet(size) {
  for (auto i : members) set(i);
}

std::size_t IndexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (Word bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

IndexSet& IndexSet::operator^=(const IndexSet& other) {
  if (other.size_ != size_) throw InputError("IndexSet size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

Gf2Matrix::Gf2Matrix(std::vector<VertexId> labels)
    : labels_(std::move(labels)), stride_(words_for(labels_.size())) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InputError("duplicate label '" + labels_[i].str() + "'");
    }
  }
  bits_.assign(labels_.size() * stride_, 0);
}

Gf2Matrix Gf2Matrix::from_entries(std::vector<VertexId> labels,
                                  const std::vector<std::vector<int>>& entries) {
  Gf2Matrix m(std::move(labels));
  const auto n = m.order();
  if (entries.size() != n) throw InputError("entry table has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw InputError("entry table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const int a = entries[i][j];
      if (a != 0 && a != 1) throw InputError("entries must be 0 or 1");
      if (a != entries[j][i]) throw InputError("entry table is not symmetric");
      if (a) m.set_entry(i, j, true);
    }
  }
  return m;
}

std::optional<std::size_t> Gf2Matrix::find(const VertexId& v) const {
  if (auto it = index_.find(v); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t Gf2Matrix::index_of(const VertexId& v) const {
  if (auto i = find(v)) return *i;
  throw InputError("unknown vertex '" + v.str() + "'");
}

IndexSet Gf2Matrix::index_set(const VertexSet& vs) const {
  IndexSet out(order());
  for (const auto& v : vs) out.set(index_of(v));
  return out;
}

VertexSet Gf2Matrix::label_set(const IndexSet& is) const {
  VertexSet out;
  for (auto i : is.members()) out.insert(labels_[i]);
  return out;
}

void Gf2Matrix::set_entry(std::size_t i, std::size_t j, bool value) {
  const Word bj = Word{1} << (j % kWordBits);
  const Word bi = Word{1} << (i % kWordBits);
  Word& wij = bits_[i * stride_ + j / kWordBits];
  Word& wji = bits_[j * stride_ + i / kWordBits];
  if (value) {
    wij |= bj;
    wji |= bi;
  } else {
    wij &= ~bj;
    wji &= ~bi;
  }
}

void Gf2Matrix::flip_entry(std::size_t i, std::size_t j) {
  bits_[i * stride_ + j / kWordBits] ^= Word{1} << (j % kWordBits);
  if (i != j) bits_[j * stride_ + i / kWordBits] ^= Word{1} << (i % kWordBits);
}

bool Gf2Matrix::is_symmetric() const {
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j = i + 1; j < order(); ++j) {
      if (entry(i, j) != entry(j, i)) return false;
    }
  }
  return true;
}

namespace {

// Full-rank test on `count` rows of `stride` words, columns restricted to
// `mask`. Rows are modified in place.
bool full_rank(Word* rows, std::size_t count, std::size_t stride, std::span<const Word> mask) {
  std::size_t rank = 0;
  for (std::size_t w = 0; w < stride; ++w) {
    for (Word cols = mask[w]; cols != 0; cols &= cols - 1) {
      const Word bit = cols & (~cols + 1);
      std::size_t p = rank;
      while (p < count && !(rows[p * stride + w] & bit)) ++p;
      if (p == count) return false;
      if (p != rank) {
        std::swap_ranges(rows + p * stride + w, rows + (p + 1) * stride, rows + rank * stride + w);
      }
      const Word* pivot = rows + rank * stride;
      for (std::size_t r = rank + 1; r < count; ++r) {
        Word* row = rows + r * stride;
        if (row[w] & bit) {
          for (std::size_t k = w; k < stride; ++k) row[k] ^= pivot[k];
        }
      }
      ++rank;
    }
  }
  return rank == count;
}

}  // namespace

bool principal_minor_det(const Gf2Matrix& m, const IndexSet& rows) {
  if (rows.size() != m.order()) throw InputError("index set does not match matrix order");
  return principal_minor_det(m, rows.words());
}

bool principal_minor_det(const Gf2Matrix& m, std::span<const Word> mask) {
  const auto stride = m.row_words();
  if (mask.size() != stride) throw InputError("row mask does not match matrix order");
  std::size_t k = 0;
  for (auto w : mask) k += static_cast<std::size_t>(std::popcount(w));
  if (k == 0) return true;

  auto gather = [&](Word* out) {
    std::size_t r = 0;
    for (std::size_t mw = 0; mw < stride; ++mw) {
      for (Word bits = mask[mw]; bits != 0; bits &= bits - 1, ++r) {
        const auto src = m.row(mw * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        for (std::size_t w = 0; w < stride; ++w) out[r * stride + w] = src[w] & mask[w];
      }
    }
  };
  if (stride == 1) {
    std::array<Word, kWordBits> scratch;
    gather(scratch.data());
    return full_rank(scratch.data(), k, 1, mask);
  }
  std::vector<Word> scratch(k * stride);
  gather(scratch.data());
  return full_rank(scratch.data(), k, stride, mask);
}

bool det(const Gf2Matrix& m) {
  IndexSet all(m.order());
  for (std::size_t i = 0; i < m.order(); ++i) all.set(i);
  return principal_minor_det(m, all);
}

Gf2Matrix principal_submatrix(const Gf2Matrix& m, const VertexSet& x) {
  const auto keep = m.index_set(x).members();
  std::vector<VertexId> labels;
  labels.reserve(keep.size());
  for (auto i : keep) labels.push_back(m.labels()[i]);
  Gf2Matrix out(std::move(labels));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a; b < keep.size(); ++b) {
      if (m.entry(keep[a], keep[b])) out.set_entry(a, b, true);
    }
  }
  return out;
}

Gf2Matrix ppt(const Gf2Matrix& m, const VertexSet& x) { return ppt(m, m.index_set(x)); }

Gf2Matrix ppt(const Gf2Matrix& m, const IndexSet& x) {
  const auto n = m.order();
  if (x.size() != n) throw InputError("index set does not match matrix order");
  const auto xs = x.members();
  const auto k = xs.size();
  if (k == 0) return m;

  // Augmented rows [m row (n bits) | identity (k bits)] for each pivot index.
  // Gauss-Jordan on the X columns turns them into [I | P^-1 Q | P^-1].
  const std::size_t width = words_for(n + k);
  std::vector<Word> aug(k * width, 0);
  auto aug_row = [&](std::size_t r) { return aug.data() + r * width; };
  auto aug_test = [&](std::size_t r, std::size_t bit) {
    return (aug_row(r)[bit / kWordBits] >> (bit % kWordBits)) & 1U;
  };
  for (std::size_t r = 0; r < k; ++r) {
    const auto src = m.row(xs[r]);
    std::copy(src.begin(), src.end(), aug_row(r));
    const auto id = n + r;
    aug_row(r)[id / kWordBits] |= Word{1} << (id % kWordBits);
  }
  for (std::size_t c = 0; c < k; ++c) {
    const auto col = xs[c];
    std::size_t p = c;
    while (p < k && !aug_test(p, col)) ++p;
    if (p == k) throw NotApplicableError("principal submatrix is singular; pivot undefined");
    if (p != c) std::swap_ranges(aug_row(p), aug_row(p) + width, aug_row(c));
    for (std::size_t r = 0; r < k; ++r) {
      if (r != c && aug_test(r, col)) {
        for (std::size_t w = 0; w < width; ++w) aug_row(r)[w] ^= aug_row(c)[w];
      }
    }
  }

  Gf2Matrix out = m;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) out.set_entry(xs[i], xs[j], aug_test(i, n + j));
  }
  std::vector<Word> acc(m.row_words());
  for (std::size_t r = 0; r < n; ++r) {
    if (x.test(r)) continue;
    // S + R P^-1 Q, row by row.
    const auto src = m.row(r);
    std::copy(src.begin(), src.end(), acc.begin());
    for (std::size_t i = 0; i < k; ++i) {
      if (m.entry(r, xs[i])) {
        for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= aug_row(i)[w];
      }
    }
    for (std::size_t s = r; s < n; ++s) {
      if (!x.test(s)) out.set_entry(r, s, (acc[s / kWordBits] >> (s % kWordBits)) & 1U);
    }
    // R P^-1 = (P^-1 Q)^T by symmetry.
    for (std::size_t i = 0; i < k; ++i) out.set_entry(xs[i], r, aug_test(i, r));
  }
  return out;
}

std::optional<VertexSet> kernel_witness(const Gf2Matrix& m) {
  const auto n = m.order();
  const auto stride = m.row_words();
  std::vector<Word> rows(n * stride);
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = m.row(i);
    std::copy(src.begin(), src.end(), rows.begin() + static_cast<std::ptrdiff_t>(i * stride));
  }
  auto test = [&](std::size_t r, std::size_t c) {
    return (rows[r * stride + c / kWordBits] >> (c % kWordBits)) & 1U;
  };

  // Reduced row echelon form; pivot_of[c] is the row holding pivot column c.
  std::vector<std::optional<std::size_t>> pivot_of(n);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = rank;
    while (p < n && !test(p, c)) ++p;
    if (p == n) continue;
    std::swap_ranges(rows.begin() + static_cast<std::ptrdiff_t>(p * stride),
                     rows.begin() + static_cast<std::ptrdiff_t>((p + 1) * stride),
                     rows.begin() + static_cast<std::ptrdiff_t>(rank * stride));
    for (std::size_t r = 0; r < n; ++r) {
      if (r != rank && test(r, c)) {
        for (std::size_t w = 0; w < stride; ++w) rows[r * stride + w] ^= rows[rank * stride + w];
      }
    }
    pivot_of[c] = rank++;
  }
  if (rank == n) return std::nullopt;

  // Back-substitution gives one null vector per free column; the sparsest
  // one (first on ties) is returned. Symmetry makes it a row dependency too.
  std::optional<IndexSet> best;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_of[f]) continue;
    IndexSet x(n, {f});
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_of[c] && test(*pivot_of[c], f)) x.set(c);
    }
    if (!best || x.count() < best->count()) best = std::move(x);
  }
  return m.label_set(*best);
}

}  // namespace pivots
