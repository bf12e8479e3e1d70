#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pivots/errors.hpp"
#include "pivots/matchings.hpp"

using namespace pivots;
using namespace pivots::testing;

TEST_CASE("pairing enumeration") {
  CHECK(enumerate_pairings(0).size() == 1);
  CHECK(enumerate_pairings(0).front().pairs.empty());
  CHECK(enumerate_pairings(2).size() == 1);
  CHECK(enumerate_pairings(4).size() == 3);
  CHECK_THROWS_AS(PairingStream(3), InputError);
  CHECK_THROWS_AS(pairing_count(5), InputError);
  for (std::size_t n = 0; n <= 10; n += 2) {
    const auto all = enumerate_pairings(n);
    CHECK(all.size() == pairing_count(n));
    std::set<Pairing> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    CHECK(std::all_of(all.begin(), all.end(), [n](const Pairing& p) { return p.is_valid(n); }));
  }
  CHECK(pairing_count(14) == 135135);
}

TEST_CASE("perfect matching parity") {
  CHECK(pm_parity(Graph{}) == true);
  CHECK(pm_parity(complete_graph(2)) == true);
  CHECK(perfect_matching_count(cycle_graph(4)) == 2);
  CHECK(pm_parity(cycle_graph(4)) == false);
  CHECK(perfect_matching_count(complete_graph(4)) == 3);
  CHECK(pm_parity(complete_graph(4)) == true);
  CHECK(pm_parity(complete_graph(3)) == false);
  CHECK_THROWS_AS(pm_parity(Graph(numbered(2), {}, std::vector<VertexId>{"0"})), InputError);
}

TEST_CASE("enumerated parity matches the integer count") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> size(0, 10);
    const auto g = random_graph(rng, size(rng));
    REQUIRE(pm_parity_enumerated(g) == (perfect_matching_count(g) % 2 == 1));
    REQUIRE(pm_parity(g) == det(g.adjacency()));
  }
  // Past the enumeration limit the determinant is used.
  for (int t = 0; t < 20; ++t) {
    const auto g = random_graph(rng, 16);
    CHECK(pm_parity(g) == pm_parity_enumerated(g));
  }
}

TEST_CASE("general perfect matching parity") {
  const Graph single(std::vector<VertexId>{"x"}, {}, std::vector<VertexId>{"x"});
  CHECK(general_pm_parity(single) == true);
  const std::vector<Edge> uv{{"u", "v"}};
  const Graph both(std::vector<VertexId>{"u", "v"}, uv, std::vector<VertexId>{"u", "v"});
  CHECK(general_matching_count(both) == 2);
  CHECK(general_pm_parity(both) == false);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::size_t> size(0, 9);
    const auto n = size(rng);
    const auto g = random_graph(rng, n);
    REQUIRE(general_pm_parity(g) == pm_parity(g));
    const auto lg = random_loop_graph(rng, n);
    REQUIRE(general_pm_parity_enumerated(lg) == (general_matching_count(lg) % 2 == 1));
    REQUIRE(general_pm_parity(lg) == det(lg.adjacency()));
  }
}

TEST_CASE("pm with repeated arguments") {
  const auto g = path_graph(4);
  CHECK(pm_multiset(g, {}) == true);
  for (const auto& x : g.vertices()) {
    for (const auto& y : g.vertices()) {
      const std::vector<VertexId> args{x, y};
      CHECK(pm_multiset(g, args) == sim(g, x, y));
    }
  }
  const std::vector<VertexId> odd{"0", "1", "2"};
  CHECK_THROWS_AS(pm_multiset(g, odd), InputError);
  const std::vector<VertexId> many(16, VertexId("0"));
  CHECK_THROWS_AS(pm_multiset(g, many), UnsupportedError);

  // Distinct arguments give the parity of the induced subgraph.
  std::mt19937_64 rng(10);
  for (int t = 0; t < 200; ++t) {
    const auto h = random_graph(rng, 8);
    std::uniform_int_distribution<std::uint64_t> pick(0, 255);
    const auto s = subset_from_mask(h, pick(rng));
    if (s.size() % 2) continue;
    const auto args = s.to_vector();
    REQUIRE(pm_multiset(h, args) == pm_parity(induced_subgraph(h, s)));
  }
}

TEST_CASE("pm with repeated arguments: permutation invariance and equal pairs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, 6);
    std::uniform_int_distribution<std::size_t> vert(0, 5);
    std::vector<VertexId> args;
    for (int i = 0; i < 6; ++i) args.push_back(vid(vert(rng)));
    const bool base = pm_multiset(g, args);
    auto shuffled = args;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(pm_multiset(g, shuffled) == base);
    auto doubled = args;
    const auto v = vid(vert(rng));
    doubled.push_back(v);
    doubled.push_back(v);
    REQUIRE(pm_multiset(g, doubled) == base);
  }
}
