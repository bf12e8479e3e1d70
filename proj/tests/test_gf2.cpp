#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pivots/errors.hpp"
#include "pivots/gf2.hpp"

using namespace pivots;
using namespace pivots::testing;

namespace {

Gf2Matrix k3() {
  return Gf2Matrix::from_entries({"u", "v", "w"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

bool even_adjacency(const Gf2Matrix& m, const VertexSet& s) {
  for (std::size_t v = 0; v < m.order(); ++v) {
    std::size_t hits = 0;
    for (const auto& x : s) hits += m.entry(v, m.index_of(x));
    if (hits % 2 != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("det of small matrices") {
  CHECK(det(Gf2Matrix{}) == true);
  CHECK(det(Gf2Matrix::from_entries({"a", "b"}, {{0, 1}, {1, 0}})) == true);
  CHECK(permutation_det(k3()) == false);
  CHECK(det(k3()) == false);
  CHECK(det(Gf2Matrix::from_entries({"a"}, {{1}})) == true);
  CHECK(det(Gf2Matrix::from_entries({"a"}, {{0}})) == false);
}

TEST_CASE("det agrees with the permutation sum up to order 7") {
  // All symmetric matrices up to order 4, random ones for 5..7.
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < loop_graph_count(n); ++mask) {
      const auto m = matrix_from_mask(n, mask);
      REQUIRE(det(m) == permutation_det(m));
    }
  }
  std::mt19937_64 rng(7);
  for (std::size_t n = 5; n <= 7; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = random_loop_graph(rng, n, 0.5, 0.3).adjacency();
      REQUIRE(det(m) == permutation_det(m));
    }
  }
}

TEST_CASE("det on multi-word rows") {
  // 40 disjoint edges: a perfect matching, det 1.
  std::vector<VertexId> labels = numbered(80);
  Gf2Matrix m(labels);
  for (std::size_t i = 0; i < 80; i += 2) m.set_entry(i, i + 1, true);
  CHECK(det(m) == true);
  m.set_entry(0, 79, true);
  m.set_entry(1, 79, true);
  CHECK(det(m) == !kernel_witness(m).has_value());

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_loop_graph(rng, 70, 0.5, 0.5);
    const auto w = kernel_witness(g.adjacency());
    REQUIRE(det(g.adjacency()) == !w.has_value());
    if (w) REQUIRE(even_adjacency(g.adjacency(), *w));
  }
}

TEST_CASE("principal submatrix") {
  const auto m = k3();
  CHECK(principal_submatrix(m, {}).order() == 0);
  CHECK(principal_submatrix(m, {"u", "v"}) ==
        Gf2Matrix::from_entries({"u", "v"}, {{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(principal_submatrix(m, {"x"}), InputError);

  // Label order is inherited, not re-sorted.
  const auto z = Gf2Matrix::from_entries({"z", "a", "m"}, {{1, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  const auto sub = principal_submatrix(z, {"a", "z"});
  CHECK(sub.labels() == std::vector<VertexId>{"z", "a"});
  CHECK(sub.entry(0, 0) == true);
  CHECK(sub.entry(0, 1) == true);
}

TEST_CASE("ppt on the empty set is the identity") {
  std::mt19937_64 rng(3);
  const auto m = random_loop_graph(rng, 6).adjacency();
  CHECK(ppt(m, VertexSet{}) == m);
}

TEST_CASE("ppt at a looped vertex matches the block display") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_loop_graph(rng, 6).adjacency();
    a.set_entry(0, 0, true);
    const auto b = ppt(a, VertexSet{"0"});
    CHECK(b.entry(0, 0));
    for (std::size_t x = 1; x < 6; ++x) {
      CHECK(b.entry(0, x) == a.entry(0, x));
      for (std::size_t y = 1; y < 6; ++y) {
        CHECK(b.entry(x, y) == (a.entry(x, y) ^ (a.entry(x, 0) && a.entry(0, y))));
      }
    }
  }
}

TEST_CASE("ppt on an edge matches the block display") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_graph(rng, 7).adjacency();
    a.set_entry(0, 1, true);
    const auto b = ppt(a, VertexSet{"0", "1"});
    CHECK_FALSE(b.entry(0, 0));
    CHECK_FALSE(b.entry(1, 1));
    CHECK(b.entry(0, 1));
    for (std::size_t x = 2; x < 7; ++x) {
      // Rows u and v exchange their chi vectors.
      CHECK(b.entry(0, x) == a.entry(1, x));
      CHECK(b.entry(1, x) == a.entry(0, x));
      for (std::size_t y = 2; y < 7; ++y) {
        const bool cross = (a.entry(x, 1) && a.entry(0, y)) ^ (a.entry(x, 0) && a.entry(1, y));
        CHECK(b.entry(x, y) == (a.entry(x, y) ^ cross));
      }
    }
  }
}

TEST_CASE("ppt rejects a singular block") {
  CHECK_THROWS_AS(ppt(k3(), VertexSet{"u"}), NotApplicableError);
  CHECK_THROWS_AS(ppt(k3(), VertexSet{"u", "v", "w"}), NotApplicableError);
}

TEST_CASE("minors of the pivot are shifted minors: exhaustive to order 5") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < loop_graph_count(n); ++mask) {
      const auto m = matrix_from_mask(n, mask);
      for (std::uint64_t xs = 0; xs < subsets; ++xs) {
        IndexSet x(n);
        for (std::size_t i = 0; i < n; ++i) {
          if ((xs >> i) & 1U) x.set(i);
        }
        if (!principal_minor_det(m, x)) continue;
        const auto p = ppt(m, x);
        REQUIRE(p.is_symmetric());
        for (std::uint64_t ys = 0; ys < subsets; ++ys) {
          IndexSet y(n);
          for (std::size_t i = 0; i < n; ++i) {
            if ((ys >> i) & 1U) y.set(i);
          }
          REQUIRE(principal_minor_det(p, y) == principal_minor_det(m, x ^ y));
        }
      }
    }
  }
}

TEST_CASE("minors of the pivot are shifted minors: random order 6") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_loop_graph(rng, 6, 0.5, 0.4).adjacency();
    for (std::uint64_t xs = 0; xs < 64; ++xs) {
      IndexSet x(6);
      for (std::size_t i = 0; i < 6; ++i) {
        if ((xs >> i) & 1U) x.set(i);
      }
      if (!principal_minor_det(m, x)) continue;
      const auto p = ppt(m, x);
      for (std::uint64_t ys = 0; ys < 64; ++ys) {
        IndexSet y(6);
        for (std::size_t i = 0; i < 6; ++i) {
          if ((ys >> i) & 1U) y.set(i);
        }
        REQUIRE(principal_minor_det(p, y) == principal_minor_det(m, x ^ y));
      }
    }
  }
}

TEST_CASE("ppt is an involution") {
  std::mt19937_64 rng(5);
  int pivots_done = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 10);
    const auto n = size(rng);
    const auto m = random_loop_graph(rng, n, 0.5, 0.5).adjacency();
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    const auto xs = pick(rng);
    IndexSet x(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((xs >> i) & 1U) x.set(i);
    }
    if (!principal_minor_det(m, x)) continue;
    ++pivots_done;
    REQUIRE(ppt(ppt(m, x), x) == m);
  }
  CHECK(pivots_done > 100);
}

TEST_CASE("kernel witness") {
  CHECK_FALSE(kernel_witness(Gf2Matrix::from_entries({"a", "b"}, {{0, 1}, {1, 0}})).has_value());
  CHECK_FALSE(kernel_witness(Gf2Matrix{}).has_value());

  // K3: of the 7 non-empty subsets only {u,v,w} has even adjacency.
  const auto m = k3();
  int valid = 0;
  for (std::uint64_t s = 1; s < 8; ++s) {
    VertexSet set;
    for (std::size_t i = 0; i < 3; ++i) {
      if ((s >> i) & 1U) set.insert(m.labels()[i]);
    }
    valid += even_adjacency(m, set);
  }
  CHECK(valid == 1);
  const auto w = kernel_witness(m);
  REQUIRE(w.has_value());
  CHECK(*w == VertexSet{"u", "v", "w"});

  // D4: 4-cycle a-b-c-d plus chord a-c; b and d are not adjacent.
  const auto d4 = Gf2Matrix::from_entries(
      {"a", "b", "c", "d"}, {{0, 1, 1, 1}, {1, 0, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 0}});
  const auto wd = kernel_witness(d4);
  REQUIRE(wd.has_value());
  CHECK(*wd == VertexSet{"b", "d"});
  CHECK(even_adjacency(d4, *wd));
}

TEST_CASE("index sets") {
  IndexSet a(70, {0, 65});
  IndexSet b(70, {65, 3});
  CHECK((a ^ b).members() == std::vector<std::size_t>{0, 3});
  CHECK(a.count() == 2);
  CHECK_THROWS_AS(a ^= IndexSet(5), InputError);
}

TEST_CASE("matrix construction errors") {
  CHECK_THROWS_AS(Gf2Matrix(std::vector<VertexId>{"a", "a"}), InputError);
  CHECK_THROWS_AS(Gf2Matrix::from_entries({"a", "b"}, {{0, 1}, {0, 0}}), InputError);
  CHECK_THROWS_AS(Gf2Matrix::from_entries({"a", "b"}, {{0, 2}, {2, 0}}), InputError);
  CHECK_THROWS_AS(k3().entry("u", "q"), InputError);
}
