#include <stdexcept>
#include <set>
#include <vector>

#include "bstrata/egf.hpp"
#include "bstrata/enumeration.hpp"
#include "bstrata/reduced_word.hpp"
#include "doctest.h"

using namespace bstrata;

namespace {

// Oracle for w^Delta: the left-to-right product of the chosen letters.
SignedPermutation direct_product(const ReducedWord& word, const Diagram& d) {
  SignedPermutation w = identity(word.rank());
  for (int k = 1; k <= word.length(); ++k)
    if (d.contains(k)) w = compose(w, simple_reflection(word.rank(), word.letter(k)));
  return w;
}

std::vector<std::uint64_t> naive_cauchon(const ReducedWord& word) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << word.length()); ++bits)
    if (is_cauchon(word, Diagram(word.rank(), bits))) out.push_back(bits);
  return out;
}

}  // namespace

TEST_CASE("build_reduced_word") {
  CHECK(build_reduced_word(1).letters() == std::vector<int>{1});
  CHECK(build_reduced_word(2).letters() == std::vector<int>{2, 1, 2});
  CHECK(build_reduced_word(4).letters() ==
        std::vector<int>{4, 3, 4, 2, 3, 4, 1, 2, 3, 4});
  for (int n = 1; n <= 8; ++n) {
    const ReducedWord word = build_reduced_word(n);
    CHECK(word.length() == n * (n + 1) / 2);
    CHECK(length(word.product()) == word.length());
  }
  CHECK_THROWS_AS(build_reduced_word(0), std::invalid_argument);
}

TEST_CASE("diagram encoding") {
  const Diagram d = Diagram::from_positions(2, {2, 3});
  CHECK(d.bits() == 6);
  CHECK(d.to_hex() == "6");
  CHECK(Diagram::from_hex(2, "6") == d);
  CHECK(Diagram::from_hex(2, "0x6") == d);
  CHECK(d.positions() == std::vector<int>{2, 3});
  CHECK(Diagram(3, 0).to_hex() == "0");
  CHECK(Diagram::from_hex(10, "7fffffffffffff").size() == 55);
  CHECK_THROWS_AS(Diagram::from_hex(2, "8"), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::from_hex(2, "g"), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::from_hex(2, ""), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::from_positions(2, {4}), std::out_of_range);
  CHECK_THROWS_AS(Diagram(11, 0), std::invalid_argument);
}

TEST_CASE("is_cauchon hand traces, n = 2") {
  const ReducedWord word = build_reduced_word(2);
  CHECK(is_cauchon(word, Diagram(2, 0)));
  CHECK_FALSE(is_cauchon(word, Diagram::from_positions(2, {3})));
  CHECK(is_cauchon(word, Diagram::from_positions(2, {2, 3})));

  const CauchonScan scan = scan_cauchon(word, Diagram::from_positions(2, {3}));
  REQUIRE(scan.failing_step.has_value());
  CHECK(*scan.failing_step == 3);  // position 1, letter s_2

  std::set<std::vector<int>> accepted;
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const Diagram d(2, bits);
    if (is_cauchon(word, d)) accepted.insert(d.positions());
  }
  CHECK(accepted == std::set<std::vector<int>>{{}, {1}, {2}, {1, 2}, {2, 3}, {1, 2, 3}});
  CHECK_THROWS_AS(is_cauchon(word, Diagram(3, 0)), std::invalid_argument);
}

TEST_CASE("w_delta") {
  const ReducedWord word = build_reduced_word(2);
  CHECK(w_delta(word, Diagram(2, 0)) == identity(2));
  CHECK(w_delta(word, Diagram(2, 7)) == word.product());
  CHECK(w_delta(word, Diagram::from_positions(2, {2})) == SignedPermutation{2, 1});
  for (int n = 1; n <= 4; ++n) {
    const ReducedWord w = build_reduced_word(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << w.length()); ++bits) {
      const Diagram d(n, bits);
      CHECK(w_delta(w, d) == direct_product(w, d));
    }
  }
}

TEST_CASE("enumerate_cauchon counts") {
  CHECK(count_cauchon(build_reduced_word(1)) == 2);
  CHECK(count_cauchon(build_reduced_word(2)) == 6);
  CHECK(count_cauchon(build_reduced_word(3)) == 26);
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_cauchon(build_reduced_word(n)) ==
          BigInt(2 * fubini(n)).get_ui());
  }
}

TEST_CASE("pruned enumeration equals the naive scan, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const ReducedWord word = build_reduced_word(n);
    std::vector<std::uint64_t> visited;
    const auto count = enumerate_cauchon(
        word, [&](const Diagram& d, const SignedPermutation& wd) {
          visited.push_back(d.bits());
          CHECK(wd == w_delta(word, d));
        });
    CHECK(count == visited.size());
    std::vector<std::uint64_t> sorted = visited;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == naive_cauchon(word));
  }
}

TEST_CASE("visit order: exclude before include, last letter first") {
  std::vector<std::string> order;
  enumerate_cauchon(build_reduced_word(2),
                    [&](const Diagram& d, const SignedPermutation&) {
                      order.push_back(d.to_hex());
                    });
  // Position 3 decided first (excluded), then 2, then 1.
  CHECK(order == std::vector<std::string>{"0", "1", "2", "3", "6", "7"});
}

TEST_CASE("w^Delta is a bijection onto [id, w], n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const ReducedWord word = build_reduced_word(n);
    std::set<SignedPermutation> images;
    std::size_t visits = 0;
    enumerate_cauchon(word, [&](const Diagram&, const SignedPermutation& wd) {
      images.insert(wd);
      ++visits;
    });
    CHECK(images.size() == visits);
    CHECK(images == bruhat_interval(word.product()));
  }
}

TEST_CASE("prefix partitioning reproduces the full stream") {
  for (int n = 2; n <= 5; ++n) {
    const ReducedWord word = build_reduced_word(n);
    std::vector<std::uint64_t> full;
    enumerate_cauchon(word, [&](const Diagram& d, const SignedPermutation&) {
      full.push_back(d.bits());
    });
    for (int depth : {0, 1, 3, 7, word.length(), word.length() + 4}) {
      std::vector<std::uint64_t> merged;
      std::uint64_t counted = 0;
      for (const auto& prefix : split_prefixes(word, depth)) {
        enumerate_from(word, prefix, [&](const Diagram& d, const SignedPermutation&) {
          merged.push_back(d.bits());
        });
        counted += count_from(word, prefix);
      }
      CHECK(merged == full);
      CHECK(counted == full.size());
    }
  }
}
