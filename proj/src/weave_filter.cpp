#include "binweave/weave_filter.hpp"

#include <stdexcept>
#include <string>

namespace binweave {

bool row_in_range(std::uint64_t x, int n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("matrix order must be in [1, " +
                                std::to_string(kMaxOrder) + "], got " +
                                std::to_string(n));
  }
  return x >= 1 && x <= row_mask(n) - 1;
}

bool is_weaveable(const BitRowMatrix& m) {
  return is_weaveable_words(m.rows());
}

}  // namespace binweave
