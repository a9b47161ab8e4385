#include "bstrata/exact_rank.hpp"

#include <stdexcept>
#include <utility>

namespace bstrata {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("exact_rank: intermediate overflow");
  }
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw std::overflow_error("exact_rank: intermediate overflow");
  }
  return out;
}

}  // namespace

int exact_rank(std::vector<std::vector<std::int64_t>> rows) {
  const std::size_t m = rows.size();
  if (m == 0) return 0;
  const std::size_t n = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("ragged matrix");
  }

  std::int64_t prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[rank], rows[pivot]);

    const std::int64_t p = rows[rank][col];
    for (std::size_t r = rank + 1; r < m; ++r) {
      const std::int64_t f = rows[r][col];
      for (std::size_t c = col + 1; c < n; ++c) {
        // Exact division: the numerator is prev_pivot times a minor.
        rows[r][c] = checked_sub(checked_mul(p, rows[r][c]),
                                 checked_mul(f, rows[rank][c])) /
                     prev_pivot;
      }
      rows[r][col] = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace bstrata
