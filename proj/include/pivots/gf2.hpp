#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pivots/vertex.hpp"

namespace pivots {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

// Dynamic bitset over indices [0, size). Used for row-index masks.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t size) : size_(size), words_(words_for(size), 0) {}
  IndexSet(std::size_t size, std::initializer_list<std::size_t> members);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  std::size_t count() const noexcept;
  std::span<const Word> words() const noexcept { return words_; }
  std::vector<std::size_t> members() const;

  IndexSet& operator^=(const IndexSet& other);
  friend IndexSet operator^(IndexSet a, const IndexSet& b) { return a ^= b; }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// Symmetric square 0/1 matrix over GF(2) indexed by vertex labels.
// Rows are bit-packed and stored contiguously, row_words() words per row.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  // Zero matrix on the given labels. Throws InputError on duplicate labels.
  explicit Gf2Matrix(std::vector<VertexId> labels);
  // Throws InputError unless entries is a square, symmetric 0/1 table.
  static Gf2Matrix from_entries(std::vector<VertexId> labels,
                                const std::vector<std::vector<int>>& entries);

  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<VertexId>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(const VertexId& v) const;
  // Throws InputError for an unknown label.
  std::size_t index_of(const VertexId& v) const;
  IndexSet index_set(const VertexSet& vs) const;
  VertexSet label_set(const IndexSet& is) const;

  bool entry(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }
  bool entry(const VertexId& a, const VertexId& b) const { return entry(index_of(a), index_of(b)); }
  // Writes both (i, j) and (j, i).
  void set_entry(std::size_t i, std::size_t j, bool value);
  void flip_entry(std::size_t i, std::size_t j);

  std::size_t row_words() const noexcept { return stride_; }
  std::span<const Word> row(std::size_t i) const { return {bits_.data() + i * stride_, stride_}; }
  // Raw row storage; the caller is responsible for keeping the matrix symmetric.
  std::span<Word> mutable_row(std::size_t i) { return {bits_.data() + i * stride_, stride_}; }

  bool is_symmetric() const;

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
    return a.labels_ == b.labels_ && a.bits_ == b.bits_;
  }

 private:
  std::vector<VertexId> labels_;
  std::map<VertexId, std::size_t> index_;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

// Determinant over GF(2) by elimination. det of the 0x0 matrix is 1.
bool det(const Gf2Matrix& m);

// det(m[X]) with X given as row indices; no submatrix is materialized.
bool principal_minor_det(const Gf2Matrix& m, const IndexSet& rows);
// Same, with the row mask given as row_words() packed words.
bool principal_minor_det(const Gf2Matrix& m, std::span<const Word> mask);

// Principal submatrix m[X]; labels keep the order they have in m.
Gf2Matrix principal_submatrix(const Gf2Matrix& m, const VertexSet& x);

// Principal pivot transform m*X over GF(2):
//
//   | P Q |  ->  | P^-1     P^-1 Q       |
//   | R S |      | R P^-1   S + R P^-1 Q |
//
// with P = m[X]. Labels keep their positions. Throws NotApplicableError when
// m[X] is singular.
Gf2Matrix ppt(const Gf2Matrix& m, const VertexSet& x);
Gf2Matrix ppt(const Gf2Matrix& m, const IndexSet& x);

// A non-empty set of rows summing to zero, or nullopt when det(m) = 1. Among
// the null-space basis vectors from back-substitution the sparsest is chosen.
std::optional<VertexSet> kernel_witness(const Gf2Matrix& m);

}  // namespace pivots
