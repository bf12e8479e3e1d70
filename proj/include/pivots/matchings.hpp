#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pivots/graph.hpp"

namespace pivots {

// Partition of the positions {0, ..., n-1} into unordered pairs. Pairs are
// stored as (a, b) with a < b, ordered by their first element.
struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  bool is_valid(std::size_t n) const;
  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;
};

// (n-1)!! for even n; 1 for n = 0.
std::uint64_t pairing_count(std::size_t n);

// Yields every pairing of n positions exactly once. Each pairing is encoded
// by the partner chosen for the lowest unpaired position; the stream walks
// those choices like an odometer.
class PairingStream {
 public:
  // Throws InputError for odd n.
  explicit PairingStream(std::size_t n);
  std::optional<Pairing> next();

 private:
  std::size_t n_;
  std::vector<std::size_t> choice_;
  bool done_ = false;
};

std::vector<Pairing> enumerate_pairings(std::size_t n);

// Graphs up to this size are counted by enumeration; larger ones use det.
inline constexpr std::size_t kMatchingEnumerationLimit = 14;
inline constexpr std::size_t kMaxPmArguments = 14;

// Parity of the number of perfect matchings of a simple graph.
bool pm_parity(const Graph& g);
// Always enumerates; no determinant shortcut. At most 64 vertices.
bool pm_parity_enumerated(const Graph& g);

// Parity of the number of partitions of V into edges and looped singletons.
bool general_pm_parity(const Graph& g);
bool general_pm_parity_enumerated(const Graph& g);

// XOR over pairings of the argument positions of the AND of x ~ y over each
// pair. Arguments may repeat. Simple graphs only, even argument count, at
// most kMaxPmArguments arguments.
bool pm_multiset(const Graph& g, std::span<const VertexId> args);

}  // namespace pivots
