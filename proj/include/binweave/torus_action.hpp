// The cyclic shift group Z_n x Z_n acting on n x n binary matrices. The two
// generators move the last row, respectively the last column, to the first
// place; composites, orbits, lexicographic comparison and the minimal
// (canonical) representative of each orbit.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "binweave/bitmatrix.hpp"

namespace binweave {

/// A group element: apply the row move row_offset times and the column move
/// col_offset times. Offsets are reduced mod n; (0, 0) is the identity.
struct TorusShift {
  int row_offset = 0;
  int col_offset = 0;

  friend bool operator==(const TorusShift&, const TorusShift&) = default;
};

/// Right-rotates the low n bits of x by one: bit 0 moves to bit n-1. Bits
/// above position n-1 are masked off first. Throws when n is out of range.
std::uint64_t rotate_row_word_right(std::uint64_t x, int n);

/// Same rotation for a word already known to fit in n bits. No checks.
constexpr std::uint64_t rotate_word_right_unchecked(std::uint64_t x,
                                                    int n) noexcept {
  return (x >> 1) | ((x & 1u) << (n - 1));
}

/// Last column becomes the first: every row-word rotated right by one.
BitRowMatrix shift_columns(const BitRowMatrix& m);

/// Last row becomes the first: (v0,...,v_{n-1}) -> (v_{n-1}, v0,...,v_{n-2}).
BitRowMatrix shift_rows(const BitRowMatrix& m);

/// shift_rows g.row_offset times, then shift_columns g.col_offset times
/// (the generators commute). Throws when the offsets are not reduced mod
/// the order of m.
BitRowMatrix apply(const BitRowMatrix& m, TorusShift g);

/// Strict lexicographic order on the row-word sequences. Equal sequences
/// compare false. Throws on mismatched orders.
bool lex_less(const BitRowMatrix& a, const BitRowMatrix& b);

/// The equivalence class of m: all composite shifts applied to m, duplicate
/// free, in ascending lexicographic order. Its size divides n^2.
std::vector<BitRowMatrix> orbit(const BitRowMatrix& m);

/// The lexicographic minimum of orbit(m); idempotent, constant on orbits.
BitRowMatrix canonical_form(const BitRowMatrix& m);

/// True iff m equals canonical_form(m), i.e. no composite shift produces a
/// lexicographically smaller matrix. Composites merely equal to m do not
/// disqualify.
bool is_canonical(const BitRowMatrix& m);

/// Word-level canonicality test on validated row-words (each < 2^n where
/// n = rows.size()). Compares against all n^2 - 1 nonidentity composites,
/// returning false at the first smaller one.
bool is_canonical_words(std::span<const std::uint64_t> rows) noexcept;

}  // namespace binweave
