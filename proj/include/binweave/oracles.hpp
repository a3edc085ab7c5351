// Verification of every classification count without exhaustive enumeration:
// cycle counting for torus translations, Cauchy-Frobenius (Burnside) orbit
// counts over the shift group, and an inclusion-exclusion count of the
// weaveable set.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "binweave/torus_action.hpp"

namespace binweave {

/// One order's worth of classification counts.
struct TableRow {
  int order = 0;
  std::uint64_t b_count = 0;    // all matrices, 2^{n^2}
  std::uint64_t q_count = 0;    // weaveable matrices
  std::uint64_t b_classes = 0;  // shift-equivalence classes
  std::uint64_t q_classes = 0;  // weaveable classes

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Number of cycles of the cell translation (i, j) -> (i + a, j + b) on the
/// n x n torus: n^2 divided by the order of the shift. A matrix fixed by the
/// shift has exactly this many free bits.
int cycle_count(int n, TorusShift g);

/// Number of shift-equivalence classes among all n x n binary matrices:
/// the average over all n^2 shifts g of 2^{cycle_count(n, g)}. The sum is
/// checked for divisibility by n^2 before dividing. n in [1, 8]; beyond
/// that the tallies leave 64 bits.
std::uint64_t burnside_full_classes(int n);

/// Number of weaveable n x n matrices by inclusion-exclusion over forced
/// all-zero / all-one column sets. n in [1, 7].
std::uint64_t qn_cardinality(int n);

/// Number of matrices fixed by g that are weaveable, by enumerating one bit
/// per cycle of the cell translation and reusing the weaveable test on each
/// materialized matrix. The identity delegates to qn_cardinality; other
/// shifts must have cycle_count(n, g) <= 24 (enumeration budget).
std::uint64_t fixed_weaveable_count(int n, TorusShift g);

/// Number of shift-equivalence classes among weaveable matrices: the
/// average over all shifts of fixed_weaveable_count, with a divisibility
/// check before dividing. n in [1, 6].
std::uint64_t burnside_weaveable_classes(int n);

/// Rows for n = 1..n_max, computed entirely from the oracles above.
/// n_max in [1, 6].
std::vector<TableRow> classification_table(int n_max);

/// Aligned text table: one column per order, one line per count kind.
std::string format_table(std::span<const TableRow> rows);

/// One JSON-line record for a table row.
std::string table_row_record(const TableRow& row);

}  // namespace binweave
