#include "pivots/matchings.hpp"

#include <bit>
#include <string>

#include "pivots/errors.hpp"

namespace pivots {

bool Pairing::is_valid(std::size_t n) const {
  if (pairs.size() * 2 != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto& [a, b] : pairs) {
    if (a == b || a >= n || b >= n || seen[a] || seen[b]) return false;
    seen[a] = seen[b] = true;
  }
  return true;
}

std::uint64_t pairing_count(std::size_t n) {
  if (n % 2 != 0) throw InputError("pairings need an even count, got " + std::to_string(n));
  std::uint64_t c = 1;
  for (std::size_t k = n; k > 1; k -= 2) c *= k - 1;
  return c;
}

PairingStream::PairingStream(std::size_t n) : n_(n), choice_(n / 2, 0) {
  if (n % 2 != 0) throw InputError("pairings need an even count, got " + std::to_string(n));
}

std::optional<Pairing> PairingStream::next() {
  if (done_) return std::nullopt;

  // choice_[i] picks the partner of the lowest position still unpaired at
  // step i, among the n - 2i - 1 remaining positions.
  Pairing out;
  std::vector<std::size_t> free(n_);
  for (std::size_t i = 0; i < n_; ++i) free[i] = i;
  for (std::size_t i = 0; i < choice_.size(); ++i) {
    const auto a = free.front();
    const auto b = free[1 + choice_[i]];
    out.pairs.emplace_back(a, b);
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(1 + choice_[i]));
    free.erase(free.begin());
  }

  std::size_t i = choice_.size();
  while (i > 0) {
    --i;
    if (++choice_[i] < n_ - 2 * i - 1) break;
    choice_[i] = 0;
    if (i == 0) done_ = true;
  }
  if (choice_.empty()) done_ = true;
  return out;
}

std::vector<Pairing> enumerate_pairings(std::size_t n) {
  std::vector<Pairing> out;
  PairingStream stream(n);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

namespace {

using Mask = std::uint64_t;

// Neighbour masks for graphs of at most 64 vertices.
std::vector<Mask> neighbour_masks(const Graph& g) {
  if (g.size() > 64) throw UnsupportedError("matching enumeration supports at most 64 vertices");
  std::vector<Mask> nbr(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    nbr[i] = g.adjacency().row(i)[0] & ~(Mask{1} << i);
  }
  return nbr;
}

bool matching_parity(const std::vector<Mask>& nbr, Mask unmatched) {
  if (unmatched == 0) return true;
  const auto i = static_cast<std::size_t>(std::countr_zero(unmatched));
  const Mask rest = unmatched & (unmatched - 1);
  bool parity = false;
  for (Mask cand = nbr[i] & rest; cand != 0; cand &= cand - 1) {
    parity ^= matching_parity(nbr, rest & ~(cand & (~cand + 1)));
  }
  return parity;
}

bool general_matching_parity(const std::vector<Mask>& nbr, Mask loops, Mask unmatched) {
  if (unmatched == 0) return true;
  const auto i = static_cast<std::size_t>(std::countr_zero(unmatched));
  const Mask rest = unmatched & (unmatched - 1);
  bool parity = false;
  if ((loops >> i) & 1U) parity ^= general_matching_parity(nbr, loops, rest);
  for (Mask cand = nbr[i] & rest; cand != 0; cand &= cand - 1) {
    parity ^= general_matching_parity(nbr, loops, rest & ~(cand & (~cand + 1)));
  }
  return parity;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

bool pm_parity_enumerated(const Graph& g) {
  if (!g.is_simple()) throw InputError("pm_parity is defined on simple graphs; use general_pm_parity");
  if (g.size() % 2 != 0) return false;
  return matching_parity(neighbour_masks(g), full_mask(g.size()));
}

bool pm_parity(const Graph& g) {
  if (g.size() <= kMatchingEnumerationLimit) return pm_parity_enumerated(g);
  if (!g.is_simple()) throw InputError("pm_parity is defined on simple graphs; use general_pm_parity");
  return det(g.adjacency());
}

bool general_pm_parity_enumerated(const Graph& g) {
  const auto nbr = neighbour_masks(g);
  Mask loops = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.has_loop(i)) loops |= Mask{1} << i;
  }
  return general_matching_parity(nbr, loops, full_mask(g.size()));
}

bool general_pm_parity(const Graph& g) {
  if (g.size() <= kMatchingEnumerationLimit) return general_pm_parity_enumerated(g);
  return det(g.adjacency());
}

namespace {

bool multiset_parity(const std::vector<std::size_t>& idx, const Graph& g, std::uint32_t remaining) {
  if (remaining == 0) return true;
  const auto p = static_cast<std::size_t>(std::countr_zero(remaining));
  const std::uint32_t rest = remaining & (remaining - 1);
  bool parity = false;
  for (std::uint32_t cand = rest; cand != 0; cand &= cand - 1) {
    const auto q = static_cast<std::size_t>(std::countr_zero(cand));
    if (idx[p] == idx[q] || g.has_edge(idx[p], idx[q])) {
      parity ^= multiset_parity(idx, g, rest & ~(std::uint32_t{1} << q));
    }
  }
  return parity;
}

}  // namespace

bool pm_multiset(const Graph& g, std::span<const VertexId> args) {
  if (!g.is_simple()) throw InputError("pm_multiset is defined on simple graphs only");
  if (args.size() % 2 != 0) {
    throw InputError("pm_multiset needs an even number of arguments, got " +
                     std::to_string(args.size()));
  }
  if (args.size() > kMaxPmArguments) {
    throw UnsupportedError("pm_multiset supports at most " + std::to_string(kMaxPmArguments) +
                           " arguments");
  }
  std::vector<std::size_t> idx;
  idx.reserve(args.size());
  for (const auto& a : args) idx.push_back(g.index_of(a));
  const auto all = static_cast<std::uint32_t>((std::uint32_t{1} << args.size()) - 1);
  return multiset_parity(idx, g, all);
}

}  // namespace pivots
