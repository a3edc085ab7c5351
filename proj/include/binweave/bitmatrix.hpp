// Packed n x n binary matrices. A matrix is stored as n unsigned row-words:
// row i is the binary expansion of word i, bit 0 holding the rightmost
// (last) column and bit n-1 the leftmost. Row 0 is the top row.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace binweave {

inline constexpr int kMaxOrder = 32;

/// All-ones word of width n, n in [1, 64).
constexpr std::uint64_t row_mask(int n) noexcept {
  return (std::uint64_t{1} << n) - 1;
}

/// Value of bit i of x (bit 0 = least significant). i must be < 64.
constexpr int bit_value(std::uint64_t x, unsigned i) noexcept {
  return static_cast<int>((x >> i) & 1u);
}

/// An n x n binary matrix as a validated vector of row-words.
/// Immutable after construction; freely shareable across threads.
class BitRowMatrix {
 public:
  /// Validates and packs. Throws std::invalid_argument when n is outside
  /// [1, kMaxOrder], rows.size() != n, or some row-word does not fit in
  /// n bits.
  static BitRowMatrix from_rows(int n, std::vector<std::uint64_t> rows);

  int order() const noexcept { return n_; }
  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }
  std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  /// Matrix entry at row r (from the top), column c (from the left).
  int cell(int r, int c) const {
    return bit_value(row(r), static_cast<unsigned>(n_ - 1 - c));
  }

  friend bool operator==(const BitRowMatrix&, const BitRowMatrix&) = default;

 private:
  BitRowMatrix(int n, std::vector<std::uint64_t> rows);

  int n_;
  std::vector<std::uint64_t> rows_;
};

/// Binary text of x, exactly n characters '0'/'1', leading zeros kept.
/// Character j (from the left) is bit n-1-j of x. Throws when n is out of
/// range or x >= 2^n.
std::string format_row(std::uint64_t x, int n);

struct ParsedRow {
  std::uint64_t word = 0;
  int width = 0;
};

/// Inverse of format_row; the width is the text length. Throws on empty
/// input, text longer than kMaxOrder, or characters other than '0'/'1'
/// (the message carries the 1-based column).
ParsedRow parse_row(std::string_view text);

enum class RenderSpec { Grid, Bitmap, Records };

/// Grid: n lines of format_row output. Bitmap: plain-text PBM (P1), matrix
/// entry 1 drawn black. Records: one JSON object per line with fields
/// "order" and "rows".
std::string render(const BitRowMatrix& m, RenderSpec spec);

}  // namespace binweave
