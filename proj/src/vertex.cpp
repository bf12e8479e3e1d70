#include "pivots/vertex.hpp"

#include <algorithm>
#include <ostream>

namespace pivots {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(const std::string& s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return std::string_view(s).substr(i);
}

}  // namespace

std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
  const bool na = all_digits(a.token_);
  const bool nb = all_digits(b.token_);
  if (na != nb) return na ? std::strong_ordering::less : std::strong_ordering::greater;
  if (na) {
    const auto sa = strip_zeros(a.token_);
    const auto sb = strip_zeros(b.token_);
    if (sa.size() != sb.size()) return sa.size() <=> sb.size();
    if (auto c = sa.compare(sb); c != 0) return c <=> 0;
  }
  return a.token_.compare(b.token_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.str(); }

void VertexSet::flip(const VertexId& v) {
  if (!members_.erase(v)) members_.insert(v);
}

VertexSet& VertexSet::operator^=(const VertexSet& other) {
  for (const auto& v : other.members_) flip(v);
  return *this;
}

}  // namespace pivots
