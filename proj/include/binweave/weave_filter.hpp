// Membership test for matrices that code a valid thread interlacing: every
// row and every column must contain at least one 0 and at least one 1.
// Word-level form: each row-word lies in [1, 2^n - 2], the AND-fold of all
// row-words is 0 and the OR-fold is 2^n - 1.
#pragma once

#include <cstdint>
#include <span>

#include "binweave/bitmatrix.hpp"

namespace binweave {

/// True iff 1 <= x <= 2^n - 2, i.e. row-word x has a 0 and a 1 among its
/// low n bits. Throws when n is out of range.
bool row_in_range(std::uint64_t x, int n);

/// Word-level test on validated row-words (each < 2^n, n = rows.size() >= 1).
inline bool is_weaveable_words(std::span<const std::uint64_t> rows) noexcept {
  const int n = static_cast<int>(rows.size());
  const std::uint64_t full = row_mask(n);
  std::uint64_t and_all = full;
  std::uint64_t or_all = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t x = rows[static_cast<std::size_t>(i)];
    if (x < 1 || x > full - 1) return false;
    and_all &= x;
    or_all |= x;
  }
  return and_all == 0 && or_all == full;
}

bool is_weaveable(const BitRowMatrix& m);

}  // namespace binweave
