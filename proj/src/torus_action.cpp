#include "binweave/torus_action.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace binweave {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("matrix order must be in [1, " +
                                std::to_string(kMaxOrder) + "], got " +
                                std::to_string(n));
  }
}

void check_shift(TorusShift g, int n) {
  if (g.row_offset < 0 || g.row_offset >= n || g.col_offset < 0 ||
      g.col_offset >= n) {
    throw std::invalid_argument(
        "shift (" + std::to_string(g.row_offset) + ", " +
        std::to_string(g.col_offset) + ") is not reduced mod " +
        std::to_string(n));
  }
}

}  // namespace

std::uint64_t rotate_row_word_right(std::uint64_t x, int n) {
  check_order(n);
  x &= row_mask(n);
  return rotate_word_right_unchecked(x, n);
}

BitRowMatrix shift_columns(const BitRowMatrix& m) {
  const int n = m.order();
  std::vector<std::uint64_t> out(m.rows());
  for (auto& w : out) w = rotate_word_right_unchecked(w, n);
  return BitRowMatrix::from_rows(n, std::move(out));
}

BitRowMatrix shift_rows(const BitRowMatrix& m) {
  const int n = m.order();
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
  out[0] = m.row(n - 1);
  for (int s = 1; s < n; ++s) out[static_cast<std::size_t>(s)] = m.row(s - 1);
  return BitRowMatrix::from_rows(n, std::move(out));
}

BitRowMatrix apply(const BitRowMatrix& m, TorusShift g) {
  const int n = m.order();
  check_shift(g, n);
  const int a = g.row_offset;
  const int b = g.col_offset;
  const std::uint64_t mask = row_mask(n);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const std::uint64_t x = m.row((s + n - a) % n);
    // rotate right by b within n bits; at b == 0 the high part masks to 0
    out[static_cast<std::size_t>(s)] = ((x >> b) | (x << (n - b))) & mask;
  }
  return BitRowMatrix::from_rows(n, std::move(out));
}

bool lex_less(const BitRowMatrix& a, const BitRowMatrix& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("order mismatch: " +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
  return a.rows() < b.rows();
}

std::vector<BitRowMatrix> orbit(const BitRowMatrix& m) {
  const int n = m.order();
  std::vector<std::vector<std::uint64_t>> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * n);
  std::vector<std::uint64_t> colState(m.rows());
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      std::vector<std::uint64_t> u(static_cast<std::size_t>(n));
      for (int s = 0; s < n; ++s) {
        u[static_cast<std::size_t>(s)] = colState[static_cast<std::size_t>((s + a) % n)];
      }
      candidates.push_back(std::move(u));
    }
    for (auto& w : colState) w = rotate_word_right_unchecked(w, n);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::vector<BitRowMatrix> out;
  out.reserve(candidates.size());
  for (auto& rows : candidates) {
    out.push_back(BitRowMatrix::from_rows(n, std::move(rows)));
  }
  return out;
}

BitRowMatrix canonical_form(const BitRowMatrix& m) {
  return orbit(m).front();
}

bool is_canonical(const BitRowMatrix& m) {
  return is_canonical_words(m.rows());
}

bool is_canonical_words(std::span<const std::uint64_t> rows) noexcept {
  const int n = static_cast<int>(rows.size());
  const std::uint64_t* v = rows.data();
  std::uint64_t w[kMaxOrder];
  std::copy(v, v + n, w);
  for (int b = 0; b < n; ++b) {
    // w holds the b-fold column shift of v; its row rotations cover every
    // composite with column offset b
    for (int a = (b == 0 ? 1 : 0); a < n; ++a) {
      int t = a;
      for (int s = 0; s < n; ++s) {
        const std::uint64_t c = w[t];
        if (c != v[s]) {
          if (c < v[s]) return false;
          break;
        }
        if (++t == n) t = 0;
      }
    }
    if (b + 1 < n) {
      for (int i = 0; i < n; ++i) w[i] = rotate_word_right_unchecked(w[i], n);
    }
  }
  return true;
}

}  // namespace binweave
