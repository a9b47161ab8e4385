#include "bstrata/enumeration.hpp"

#include <algorithm>

namespace bstrata {

namespace {

void collect_prefixes(const ReducedWord& word, int target_depth,
                      SearchPrefix& node, std::vector<SearchPrefix>& out) {
  if (node.depth == target_depth) {
    out.push_back(node);
    return;
  }
  const int k = word.length() - node.depth;
  const int i = word.letter(k);
  if (!node.v.ascends_at(i)) return;

  const std::uint64_t saved_bits = node.bits;
  ++node.depth;
  collect_prefixes(word, target_depth, node, out);
  node.v.right_multiply_simple(i);
  node.bits |= std::uint64_t{1} << (k - 1);
  collect_prefixes(word, target_depth, node, out);
  node.v.right_multiply_simple(i);
  node.bits = saved_bits;
  --node.depth;
}

}  // namespace

std::vector<SearchPrefix> split_prefixes(const ReducedWord& word, int depth) {
  std::vector<SearchPrefix> out;
  SearchPrefix root = root_prefix(word);
  collect_prefixes(word, std::clamp(depth, 0, word.length()), root, out);
  return out;
}

std::uint64_t count_from(const ReducedWord& word, const SearchPrefix& prefix) {
  SignedPermutation v = prefix.v;
  detail::NoVisit none;
  return detail::cauchon_dfs<false>(word, word.length() - prefix.depth, v,
                                    prefix.bits, none);
}

std::uint64_t count_cauchon(const ReducedWord& word) {
  return count_from(word, root_prefix(word));
}

std::vector<Diagram> cauchon_diagrams(const ReducedWord& word) {
  std::vector<Diagram> out;
  enumerate_cauchon(word, [&](const Diagram& d, const SignedPermutation&) {
    out.push_back(d);
  });
  return out;
}

}  // namespace bstrata
