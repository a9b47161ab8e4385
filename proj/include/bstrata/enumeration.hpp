// Pruned depth-first enumeration of Cauchon diagrams.
//
// Positions are processed from t down to 1. At position k the ascent test
// is_right_ascent(v, i_k) must hold; if it fails the whole subtree is
// pruned. Otherwise the exclude branch is explored before the include
// branch (v <- v s_{i_k}), which fixes the visit order.
//
// The tree can be cut after the first p decisions. Each live node at that
// depth is a SearchPrefix; enumerating every prefix in split order visits the
// same diagrams in the same order as one full enumeration.

#pragma once

#include <cstdint>
#include <vector>

#include "bstrata/reduced_word.hpp"

namespace bstrata {

struct SearchPrefix {
  /// Number of positions already decided (t, t-1, ..., t-depth+1).
  int depth = 0;
  std::uint64_t bits = 0;
  SignedPermutation v;
};

namespace detail {

template <bool kWantLeaves, class Visitor>
std::uint64_t cauchon_dfs(const ReducedWord& word, int k, SignedPermutation& v,
                          std::uint64_t bits, Visitor& visit) {
  if (k == 0) {
    if constexpr (kWantLeaves) {
      visit(Diagram(word.rank(), bits), inverse(v));
    }
    return 1;
  }
  const int i = word.letter(k);
  if (!v.ascends_at(i)) return 0;
  std::uint64_t count = cauchon_dfs<kWantLeaves>(word, k - 1, v, bits, visit);
  v.right_multiply_simple(i);
  count += cauchon_dfs<kWantLeaves>(word, k - 1, v,
                                    bits | (std::uint64_t{1} << (k - 1)), visit);
  v.right_multiply_simple(i);
  return count;
}

struct NoVisit {
  void operator()(const Diagram&, const SignedPermutation&) const {}
};

}  // namespace detail

/// Root prefix: nothing decided yet.
inline SearchPrefix root_prefix(const ReducedWord& word) {
  return {0, 0, identity(word.rank())};
}

/// Live prefixes after min(depth, t) decisions, in canonical visit order.
std::vector<SearchPrefix> split_prefixes(const ReducedWord& word, int depth);

/// Enumerate the subtree below a prefix; visitor(Diagram, w^Delta).
template <class Visitor>
std::uint64_t enumerate_from(const ReducedWord& word,
                             const SearchPrefix& prefix, Visitor&& visit) {
  SignedPermutation v = prefix.v;
  return detail::cauchon_dfs<true>(word, word.length() - prefix.depth, v,
                                   prefix.bits, visit);
}

/// Number of Cauchon diagrams below a prefix.
std::uint64_t count_from(const ReducedWord& word, const SearchPrefix& prefix);

/// Visit every Cauchon diagram exactly once; returns the number visited.
template <class Visitor>
std::uint64_t enumerate_cauchon(const ReducedWord& word, Visitor&& visit) {
  return enumerate_from(word, root_prefix(word), visit);
}

std::uint64_t count_cauchon(const ReducedWord& word);

/// All Cauchon diagrams in canonical order.
std::vector<Diagram> cauchon_diagrams(const ReducedWord& word);

}  // namespace bstrata
