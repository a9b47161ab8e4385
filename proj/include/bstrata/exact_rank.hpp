#pragma once

#include <cstdint>
#include <vector>

namespace bstrata {

/// Rank of a dense integer matrix by fraction-free (Bareiss) elimination.
/// Every intermediate entry is a minor of the input, so values stay exact;
/// overflow is detected and reported as std::overflow_error.
int exact_rank(std::vector<std::vector<std::int64_t>> rows);

}  // namespace bstrata
