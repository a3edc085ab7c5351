#include "binweave/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "binweave/weave_filter.hpp"

namespace binweave {

namespace {

void check_range(int n, int max, const char* what) {
  if (n < 1 || n > max) {
    throw std::invalid_argument(std::string(what) + " supports orders in [1, " +
                                std::to_string(max) + "], got " +
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

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * static_cast<std::uint64_t>(n - k + i) /
          static_cast<std::uint64_t>(i);
  }
  return out;
}

__int128 ipow(__int128 base, int exp) {
  __int128 out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

int cycle_count(int n, TorusShift g) {
  check_range(n, kMaxOrder, "cycle_count");
  check_shift(g, n);
  const int row_order = n / std::gcd(g.row_offset, n);
  const int col_order = n / std::gcd(g.col_offset, n);
  return n * n / std::lcm(row_order, col_order);
}

std::uint64_t burnside_full_classes(int n) {
  check_range(n, 8, "burnside_full_classes");
  unsigned __int128 sum = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      sum += static_cast<unsigned __int128>(1) << cycle_count(n, {a, b});
    }
  }
  const auto group = static_cast<unsigned __int128>(n) * n;
  if (sum % group != 0) {
    throw std::logic_error("orbit-count sum not divisible by the group size");
  }
  return static_cast<std::uint64_t>(sum / group);
}

std::uint64_t qn_cardinality(int n) {
  check_range(n, 7, "qn_cardinality");
  // j columns forced all-zero, k columns forced all-one; each row then picks
  // a word over the remaining columns that still has a 0 and a 1 wherever no
  // column forces one.
  __int128 total = 0;
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k + j <= n; ++k) {
      const __int128 per_row = (static_cast<__int128>(1) << (n - j - k)) -
                               (k == 0 ? 1 : 0) - (j == 0 ? 1 : 0);
      const __int128 term = static_cast<__int128>(binomial(n, j)) *
                            static_cast<__int128>(binomial(n - j, k)) *
                            ipow(per_row, n);
      total += ((j + k) % 2 == 0) ? term : -term;
    }
  }
  if (total < 0) {
    throw std::logic_error("inclusion-exclusion total came out negative");
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t fixed_weaveable_count(int n, TorusShift g) {
  check_range(n, kMaxOrder, "fixed_weaveable_count");
  check_shift(g, n);
  if (g.row_offset == 0 && g.col_offset == 0) return qn_cardinality(n);

  const int cycles = cycle_count(n, g);
  if (cycles > 24) {
    throw std::invalid_argument(
        "fixed-point enumeration budget exceeded: shift has " +
        std::to_string(cycles) + " cycles (max 24)");
  }

  // Cell-to-cycle index map, flattened to one mask row contribution per
  // (cycle, row) pair.
  std::vector<int> cycle_of(static_cast<std::size_t>(n) * n, -1);
  int next_id = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (cycle_of[static_cast<std::size_t>(r) * n + c] >= 0) continue;
      int rr = r;
      int cc = c;
      while (cycle_of[static_cast<std::size_t>(rr) * n + cc] < 0) {
        cycle_of[static_cast<std::size_t>(rr) * n + cc] = next_id;
        rr = (rr + g.row_offset) % n;
        cc = (cc + g.col_offset) % n;
      }
      ++next_id;
    }
  }
  std::vector<std::uint64_t> contribution(
      static_cast<std::size_t>(next_id) * n, 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int id = cycle_of[static_cast<std::size_t>(r) * n + c];
      contribution[static_cast<std::size_t>(id) * n + r] |=
          std::uint64_t{1} << (n - 1 - c);
    }
  }

  const std::int64_t total = std::int64_t{1} << cycles;
  std::uint64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : hits) \
    if (total >= (1LL << 16))
#endif
  for (std::int64_t bits = 0; bits < total; ++bits) {
    std::uint64_t rows[kMaxOrder] = {};
    for (int id = 0; id < next_id; ++id) {
      if ((bits >> id) & 1) {
        const std::uint64_t* per_row = &contribution[static_cast<std::size_t>(id) * n];
        for (int r = 0; r < n; ++r) rows[r] |= per_row[r];
      }
    }
    if (is_weaveable_words({rows, static_cast<std::size_t>(n)})) ++hits;
  }
  return hits;
}

std::uint64_t burnside_weaveable_classes(int n) {
  check_range(n, 6, "burnside_weaveable_classes");
  std::uint64_t sum = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      sum += fixed_weaveable_count(n, {a, b});
    }
  }
  const auto group = static_cast<std::uint64_t>(n) * n;
  if (sum % group != 0) {
    throw std::logic_error("orbit-count sum not divisible by the group size");
  }
  return sum / group;
}

std::vector<TableRow> classification_table(int n_max) {
  check_range(n_max, 6, "classification_table");
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    rows.push_back({n, std::uint64_t{1} << (n * n), qn_cardinality(n),
                    burnside_full_classes(n), burnside_weaveable_classes(n)});
  }
  return rows;
}

std::string format_table(std::span<const TableRow> rows) {
  static constexpr const char* kLabels[] = {"n", "B_n", "Q_n", "B_n/~",
                                            "Q_n/~"};
  const std::size_t cols = rows.size();
  std::vector<std::vector<std::string>> cells(5);
  for (int line = 0; line < 5; ++line) {
    cells[static_cast<std::size_t>(line)].push_back(kLabels[line]);
  }
  for (const auto& row : rows) {
    cells[0].push_back(std::to_string(row.order));
    cells[1].push_back(std::to_string(row.b_count));
    cells[2].push_back(std::to_string(row.q_count));
    cells[3].push_back(std::to_string(row.b_classes));
    cells[4].push_back(std::to_string(row.q_classes));
  }
  std::vector<std::size_t> width(cols + 1, 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c <= cols; ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  std::string out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c <= cols; ++c) {
      if (c > 0) out += "  ";
      const std::string& cell = line[c];
      // left-align the label column, right-align numbers
      if (c == 0) {
        out += cell;
        out.append(width[c] - cell.size(), ' ');
      } else {
        out.append(width[c] - cell.size(), ' ');
        out += cell;
      }
    }
    out += '\n';
  }
  return out;
}

std::string table_row_record(const TableRow& row) {
  return "{\"order\":" + std::to_string(row.order) +
         ",\"b_count\":" + std::to_string(row.b_count) +
         ",\"q_count\":" + std::to_string(row.q_count) +
         ",\"b_classes\":" + std::to_string(row.b_classes) +
         ",\"q_classes\":" + std::to_string(row.q_classes) + "}\n";
}

}  // namespace binweave
