#include <doctest.h>

#include <random>

#include "momentcut/lattice.hpp"
#include "support/oracles.hpp"

using namespace momentcut;
using namespace momentcut::testing;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rat("3/6") == Rat(1, 2));
  CHECK(parse_rat("-2/4") == Rat(-1, 2));
  CHECK(parse_rat("5") == Rat(5));
  CHECK(parse_rat("4/-6") == Rat(-2, 3));
  CHECK(rat_str(parse_rat("-10/4")) == "-5/2");
  CHECK(rat_str(Rat(4)) == "4");
  CHECK_THROWS_AS(parse_rat("1/0"), RatParseError);
  CHECK_THROWS_AS(parse_rat("a/b"), RatParseError);
  CHECK_THROWS_AS(parse_rat("1/2/3"), RatParseError);
  CHECK_THROWS_AS(parse_rat(""), RatParseError);
}

TEST_CASE("hnf identity and diagonal inputs") {
  IntMat id = identity_mat(2);
  HnfResult r = hnf(id, 2);
  CHECK(r.h == id);
  CHECK(r.u == id);

  IntMat diag = {{Int(2), Int(0)}, {Int(0), Int(3)}};
  r = hnf(diag, 2);
  CHECK(r.h == diag);
  CHECK(r.u == id);
}

TEST_CASE("hnf preserves the row lattice") {
  // Oracle: brute-force Z-span membership with small coefficients.
  IntMat m = {{Int(2), Int(4)}, {Int(1), Int(3)}};
  HnfResult r = hnf(m, 2);
  CHECK(int_det(r.u) * int_det(r.u) == 1);
  // h = u * m
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Int acc = 0;
      for (std::size_t t = 0; t < 2; ++t) acc += r.u[i][t] * m[t][j];
      CHECK(acc == r.h[i][j]);
    }
  for (const IntVec& row : r.h) CHECK(zspan_member_bruteforce(m, row, 6));
  for (const IntVec& row : m) CHECK(zspan_member_bruteforce(r.h, row, 6));
  // echelon with positive pivots and reduced entries
  CHECK(r.h[0][0] > 0);
  CHECK(r.h[1][0] == 0);
  CHECK(r.h[1][1] > 0);
  CHECK(r.h[0][1] >= 0);
  CHECK(r.h[0][1] < r.h[1][1]);
}

TEST_CASE("hnf unimodular transform on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> size(1, 4);
  for (int it = 0; it < 200; ++it) {
    std::size_t rows = static_cast<std::size_t>(size(rng));
    std::size_t cols = static_cast<std::size_t>(size(rng));
    IntMat m(rows, IntVec(cols));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    HnfResult r = hnf(m, cols);
    Int du = int_det(r.u);
    CHECK((du == 1 || du == -1));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Int acc = 0;
        for (std::size_t t = 0; t < rows; ++t) acc += r.u[i][t] * m[t][j];
        CHECK(acc == r.h[i][j]);
      }
    // pivots positive, entries above reduced, zero rows at the bottom
    std::size_t last_pivot_col = 0;
    bool first = true;
    for (std::size_t i = 0; i < r.rank; ++i) {
      std::size_t c = 0;
      while (c < cols && r.h[i][c] == 0) ++c;
      REQUIRE(c < cols);
      CHECK(r.h[i][c] > 0);
      if (!first) CHECK(c > last_pivot_col);
      last_pivot_col = c;
      first = false;
      for (std::size_t pre = 0; pre < i; ++pre) {
        CHECK(r.h[pre][c] >= 0);
        CHECK(r.h[pre][c] < r.h[i][c]);
      }
    }
    for (std::size_t i = r.rank; i < rows; ++i) CHECK(is_zero(r.h[i]));
  }
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive({Int(1), Int(0)}));
  CHECK_FALSE(is_primitive({Int(2), Int(4)}));
  CHECK(is_primitive({Int(3), Int(5)}));
  CHECK_THROWS_AS(is_primitive({Int(0), Int(0)}), ZeroVectorError);
}

TEST_CASE("saturate scaling and empty input") {
  Saturation s = saturate({{Int(2), Int(0)}}, 2);
  CHECK(s.lattice.basis == IntMat{{Int(1), Int(0)}});
  CHECK(s.index == 2);

  s = saturate({}, 2);
  CHECK(s.lattice.basis.empty());
  CHECK(s.index == 1);
}

TEST_CASE("saturate full-rank example with parallelepiped oracle") {
  IntMat gens = {{Int(2), Int(2)}, {Int(0), Int(4)}};
  Saturation s = saturate(gens, 2);
  Sublattice full{2, identity_mat(2)};
  CHECK(lattice_equal(s.lattice, full));
  CHECK(s.index == 8);
  CHECK(parallelepiped_index(gens, 2) == 8);
}

TEST_CASE("saturate is idempotent") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> size(1, 3);
  for (int it = 0; it < 100; ++it) {
    std::size_t rank = static_cast<std::size_t>(size(rng));
    std::size_t count = static_cast<std::size_t>(size(rng));
    IntMat gens(count, IntVec(rank));
    for (auto& row : gens)
      for (auto& x : row) x = entry(rng);
    Saturation first = saturate(gens, rank);
    Saturation again = saturate(first.lattice.basis, rank);
    CHECK(again.index == 1);
    CHECK(lattice_equal(first.lattice, again.lattice));
  }
}

TEST_CASE("is_primitive agrees with rank-1 saturation") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int it = 0; it < 100; ++it) {
    IntVec v = {Int(entry(rng)), Int(entry(rng)), Int(entry(rng))};
    if (is_zero(v)) continue;
    Saturation s = saturate({v}, 3);
    bool sat_says = (s.index == 1);
    CHECK(is_primitive(v) == sat_says);
  }
}

TEST_CASE("is_z_basis") {
  CHECK(is_z_basis({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2));
  CHECK_FALSE(is_z_basis({{Int(1), Int(0)}, {Int(0), Int(2)}}, 2));
  CHECK(is_z_basis({{Int(2), Int(1)}, {Int(1), Int(1)}}, 2));
  CHECK_THROWS_AS(is_z_basis({{Int(1), Int(0)}}, 2), RankMismatchError);
}

TEST_CASE("direct_sum_equals_saturation spec cases") {
  Sublattice a1{2, {{Int(1), Int(0)}}};
  CHECK(direct_sum_equals_saturation(a1, {{Int(0), Int(1)}}));

  Sublattice a2{2, {}};
  CHECK_FALSE(direct_sum_equals_saturation(a2, {{Int(1), Int(1)}, {Int(1), Int(-1)}}));
  // index 2: (1,0) is in the rational span but not the Z-span
  CHECK(saturate({{Int(1), Int(1)}, {Int(1), Int(-1)}}, 2).index == 2);

  Sublattice a3{3, {{Int(1), Int(0), Int(0)}}};
  CHECK(direct_sum_equals_saturation(a3, {{Int(0), Int(1), Int(0)}}));

  Sublattice dep{2, {{Int(1), Int(0)}}};
  CHECK_THROWS_AS(direct_sum_equals_saturation(dep, {{Int(2), Int(0)}}),
                  NotIndependentError);
}

TEST_CASE("direct_sum_equals_saturation agrees with the parallelepiped oracle") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> rank_dist(1, 3);
  int done = 0;
  while (done < 200) {
    std::size_t rank = static_cast<std::size_t>(rank_dist(rng));
    std::size_t total = static_cast<std::size_t>(rank_dist(rng));
    if (total > rank) total = rank;
    IntMat rows(total, IntVec(rank));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    if (int_rank(rows) != rows.size()) continue;
    std::size_t split = static_cast<std::size_t>(rng() % (total + 1));
    Sublattice part_a{rank, IntMat(rows.begin(), rows.begin() + split)};
    IntMat gens_b(rows.begin() + split, rows.end());
    bool lib = direct_sum_equals_saturation(part_a, gens_b);
    CHECK(lib == (parallelepiped_index(rows, rank) == 1));
    ++done;
  }
}
