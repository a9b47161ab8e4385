#include <stdexcept>
#include <map>
#include <random>
#include <set>

#include "bstrata/egf.hpp"
#include "bstrata/enumeration.hpp"
#include "bstrata/harness.hpp"
#include "bstrata/pipe_dreams.hpp"
#include "doctest.h"

using namespace bstrata;

TEST_CASE("histogram examples") {
  const DimensionHistogram h1 = enumerate_histogram(1, 1, true);
  CHECK(h1.counts == std::map<int, std::uint64_t>{{0, 1}, {1, 1}});
  CHECK(h1.total == 2);

  const DimensionHistogram h2 = enumerate_histogram(2, 1, true);
  CHECK(h2.counts == std::map<int, std::uint64_t>{{0, 2}, {1, 3}, {2, 1}});
  CHECK(h2.total == 6);

  CHECK(enumerate_histogram(3, 1, true).total == 26);
  CHECK(enumerate_histogram(3, 1, false).total == 26);
  CHECK(enumerate_histogram(3, 1, false).counts.empty());
}

TEST_CASE("histogram matches p_n(t) for n <= 6") {
  const StrataPolynomials polys(6);
  for (int n = 1; n <= 6; ++n) {
    const DimensionHistogram h = enumerate_histogram(n, 2, true);
    const PolyT& p = polys.polynomial(n);
    for (int d = 0; d <= n; ++d) {
      const auto it = h.counts.find(d);
      const std::uint64_t got = it == h.counts.end() ? 0 : it->second;
      CHECK(BigRational(static_cast<unsigned long>(got)) == p.coefficient(d));
    }
  }
}

TEST_CASE("worker count does not change the histogram") {
  const DimensionHistogram one = enumerate_histogram(5, 1, true);
  for (int jobs : {2, 3, 8}) {
    const DimensionHistogram many = enumerate_histogram(5, jobs, true);
    CHECK(many.counts == one.counts);
    CHECK(many.total == one.total);
  }
  CHECK(enumerate_histogram(6, 4, false).total == 9366);
  CHECK_THROWS_AS(enumerate_histogram(3, 0, true), UsageError);
}

TEST_CASE("sample_cauchon returns Cauchon diagrams reproducibly") {
  const ReducedWord word = build_reduced_word(6);
  std::mt19937_64 a(42), b(42);
  std::set<std::uint64_t> distinct;
  for (int i = 0; i < 500; ++i) {
    const Diagram d = sample_cauchon(word, a);
    CHECK(is_cauchon(word, d));
    CHECK(d == sample_cauchon(word, b));
    distinct.insert(d.bits());
  }
  CHECK(distinct.size() > 100);
}
