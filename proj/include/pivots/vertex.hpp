#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pivots {

// Opaque vertex token. All-digit tokens order numerically and come before
// every other token; the rest order lexicographically.
class VertexId {
 public:
  VertexId() = default;
  VertexId(std::string token) : token_(std::move(token)) {}
  VertexId(const char* token) : token_(token) {}
  VertexId(std::string_view token) : token_(token) {}
  explicit VertexId(std::int64_t number) : token_(std::to_string(number)) {}

  const std::string& str() const noexcept { return token_; }
  bool empty() const noexcept { return token_.empty(); }

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b);

 private:
  std::string token_;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

// Finite vertex set with symmetric difference. Iteration is in VertexId order.
class VertexSet {
 public:
  using const_iterator = std::set<VertexId>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) : members_(ids) {}
  template <typename It>
  VertexSet(It first, It last) : members_(first, last) {}

  bool contains(const VertexId& v) const { return members_.count(v) != 0; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  void insert(const VertexId& v) { members_.insert(v); }
  void erase(const VertexId& v) { members_.erase(v); }
  // Toggles membership of v.
  void flip(const VertexId& v);

  VertexSet& operator^=(const VertexSet& other);
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  std::vector<VertexId> to_vector() const { return {members_.begin(), members_.end()}; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::set<VertexId> members_;
};

}  // namespace pivots
