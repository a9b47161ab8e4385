#include <stdexcept>
#include <random>
#include <set>
#include <vector>

#include "bstrata/egf.hpp"
#include "bstrata/enumeration.hpp"
#include "bstrata/exact_rank.hpp"
#include "bstrata/pipe_dreams.hpp"
#include "doctest.h"

using namespace bstrata;

namespace {

// The worked pipe-dream example: blacks at grid (3,1), (3,2), (2,2) in the
// staircase, positions 2, 3, 5 of the n = 4 word.
Diagram worked_example() { return Diagram::from_positions(4, {2, 3, 5}); }

// Oracle: rank by rational Gauss-Jordan elimination.
int rational_rank(const std::vector<std::vector<std::int64_t>>& m) {
  std::vector<std::vector<BigRational>> a;
  for (const auto& row : m) {
    std::vector<BigRational> r;
    for (auto v : row) r.emplace_back(static_cast<long>(v));
    a.push_back(std::move(r));
  }
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const BigRational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

TEST_CASE("tau examples") {
  CHECK(tau(SymmetricGrid(3, Color::black)) == identity(3));
  CHECK(tau(SymmetricGrid(2)).window() == std::vector<int>{-2, -1});

  const ReducedWord word = build_reduced_word(4);
  const SignedPermutation t = tau_of_diagram(word, worked_example());
  CHECK(cycle_notation(t) == "(1 -4)(-1 4)(2 3 -2 -3)");

  SymmetricGrid asymmetric(2);
  asymmetric.set(1, 1, Color::black);
  CHECK_THROWS_AS(tau(asymmetric), std::invalid_argument);
}

TEST_CASE("pipes are conserved and commute with negation") {
  for (int n = 1; n <= 5; ++n) {
    const ReducedWord word = build_reduced_word(n);
    enumerate_cauchon(word, [&](const Diagram& d, const SignedPermutation&) {
      const SymmetricGrid g = symmetric_grid(diagram_to_staircase(word, d));
      std::set<int> ends;
      for (int i = 1; i <= n; ++i) {
        CHECK(trace_pipe(g, -i) == -trace_pipe(g, i));
        ends.insert(trace_pipe(g, i));
        ends.insert(trace_pipe(g, -i));
      }
      CHECK(ends.size() == static_cast<std::size_t>(2 * n));
    });
  }
}

TEST_CASE("tau = w^Delta w^-1") {
  const ReducedWord word4 = build_reduced_word(4);
  CHECK(verify_lemma_tau(word4, Diagram(4, (std::uint64_t{1} << 10) - 1)));
  CHECK(verify_lemma_tau(word4, Diagram(4, 0)));
  CHECK(tau_of_diagram(word4, Diagram(4, 0)) == inverse(word4.product()));
  CHECK(verify_lemma_tau(word4, worked_example()));
  CHECK_THROWS_AS(verify_lemma_tau(build_reduced_word(2), Diagram(2, 4)),
                  std::invalid_argument);

  for (int n = 1; n <= 5; ++n) {
    const ReducedWord word = build_reduced_word(n);
    std::uint64_t failures = 0;
    enumerate_cauchon(word, [&](const Diagram& d, const SignedPermutation&) {
      if (!verify_lemma_tau(word, d)) ++failures;
    });
    CHECK(failures == 0);
  }
}

TEST_CASE("classify_cycles") {
  SUBCASE("identity") {
    const CycleClassification c = classify_cycles(identity(2));
    REQUIRE(c.cycles.size() == 2);
    for (const auto& g : c.cycles) CHECK(g.kind == CycleKind::A);
    CHECK(c.dimension == 0);
  }
  SUBCASE("worked example") {
    const CycleClassification c = classify_cycles(SignedPermutation{-4, 3, -2, -1});
    REQUIRE(c.cycles.size() == 2);
    const GroupedCycle& b = c.cycles[0];
    CHECK(b.kind == CycleKind::B);
    CHECK(b.size == 2);
    CHECK(b.even());
    CHECK(b.contributes);
    CHECK(b.cycles == std::vector<std::vector<int>>{{1, -4}, {-1, 4}});
    const GroupedCycle& cc = c.cycles[1];
    CHECK(cc.kind == CycleKind::C);
    CHECK(cc.size == 2);
    CHECK(cc.even());
    CHECK_FALSE(cc.contributes);
    CHECK(cc.support == std::vector<int>{-3, -2, 2, 3});
    CHECK(c.dimension == 1);
  }
  SUBCASE("odd type (c)") {
    const CycleClassification c = classify_cycles(SignedPermutation{-1, -2});
    REQUIRE(c.cycles.size() == 2);
    for (const auto& g : c.cycles) {
      CHECK(g.kind == CycleKind::C);
      CHECK(g.size == 1);
      CHECK(g.contributes);
    }
    CHECK(c.dimension == 2);
  }
  SUBCASE("odd type (b) does not contribute") {
    // (1 2 3)(-1 -2 -3)
    const CycleClassification c = classify_cycles(SignedPermutation{2, 3, 1});
    REQUIRE(c.cycles.size() == 1);
    CHECK(c.cycles[0].kind == CycleKind::B);
    CHECK(c.cycles[0].size == 3);
    CHECK_FALSE(c.cycles[0].contributes);
    CHECK(c.dimension == 0);
  }
  SUBCASE("supports partition +-[n]") {
    for (int n = 1; n <= 4; ++n) {
      const ReducedWord word = build_reduced_word(n);
      enumerate_cauchon(word, [&](const Diagram& d, const SignedPermutation&) {
        std::multiset<int> all;
        for (const auto& g : classify_cycles(tau_of_diagram(word, d)).cycles)
          all.insert(g.support.begin(), g.support.end());
        std::multiset<int> expected;
        for (int i = 1; i <= n; ++i) expected.insert({i, -i});
        CHECK(all == expected);
      });
    }
  }
}

TEST_CASE("cycle_notation") {
  CHECK(cycle_notation(identity(3)) == "()");
  CHECK(cycle_notation(SignedPermutation{-1}) == "(1 -1)");
  CHECK(cycle_notation(SignedPermutation{-4, 3, -2, -1}) == "(1 -4)(-1 4)(2 3 -2 -3)");
}

TEST_CASE("stratum_dimension") {
  const ReducedWord word4 = build_reduced_word(4);
  CHECK(stratum_dimension(word4, Diagram(4, (std::uint64_t{1} << 10) - 1)) == 0);
  CHECK(stratum_dimension(word4, worked_example()) == 1);
  const ReducedWord word2 = build_reduced_word(2);
  CHECK(stratum_dimension(word2, Diagram::from_positions(2, {2})) == 2);
  CHECK(stratum_dimension(build_reduced_word(1), Diagram(1, 0)) == 1);
  CHECK_THROWS_AS(stratum_dimension(word2, Diagram(2, 4)), std::invalid_argument);

  std::multiset<int> dims;
  enumerate_cauchon(word2, [&](const Diagram& d, const SignedPermutation&) {
    dims.insert(stratum_dimension(word2, d));
  });
  CHECK(dims == std::multiset<int>{0, 0, 1, 1, 1, 2});
}

TEST_CASE("exact_rank agrees with rational elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % 5) - 2;
    // Force some dependent rows.
    if (rows > 2 && trial % 3 == 0)
      for (int c = 0; c < cols; ++c) m[2][c] = m[0][c] - 2 * m[1][c];
    CHECK(exact_rank(m) == rational_rank(m));
  }
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
  CHECK_THROWS_AS(exact_rank({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("kernel_dimension") {
  CHECK(kernel_dimension(identity(3)) == 0);
  CHECK(kernel_dimension(SignedPermutation{-1}) == 1);
  CHECK(kernel_dimension(SignedPermutation{-4, 3, -2, -1}) == 1);
}

TEST_CASE("cycle formula equals kernel dimension, every diagram n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const ReducedWord word = build_reduced_word(n);
    std::uint64_t mismatches = 0;
    enumerate_cauchon(word, [&](const Diagram& d, const SignedPermutation&) {
      const SignedPermutation t = tau_of_diagram(word, d);
      const int dim = stratum_dimension(word, d);
      if (dim != kernel_dimension(t)) ++mismatches;
      CHECK(dim >= 0);
      CHECK(dim <= n);
    });
    CHECK(mismatches == 0);
  }
}

TEST_CASE("all-black rows are exactly the fixed pairs") {
  for (int n = 1; n <= 5; ++n) {
    const ReducedWord word = build_reduced_word(n);
    enumerate_cauchon(word, [&](const Diagram& d, const SignedPermutation&) {
      const SymmetricGrid g = symmetric_grid(diagram_to_staircase(word, d));
      const SignedPermutation t = tau(g);
      for (int i = 1; i <= n; ++i) {
        bool all_black = true;
        for (int c = 1; c <= n; ++c) all_black = all_black && g.at(i, c) == Color::black;
        CHECK(all_black == (t(i) == i));
      }
    });
  }
}
