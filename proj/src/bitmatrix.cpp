#include "binweave/bitmatrix.hpp"

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

}  // namespace

BitRowMatrix::BitRowMatrix(int n, std::vector<std::uint64_t> rows)
    : n_(n), rows_(std::move(rows)) {}

BitRowMatrix BitRowMatrix::from_rows(int n, std::vector<std::uint64_t> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("row count mismatch: expected " +
                                std::to_string(n) + " rows, got " +
                                std::to_string(rows.size()));
  }
  const std::uint64_t full = row_mask(n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] > full) {
      throw std::invalid_argument("row " + std::to_string(i) +
                                  " out of range: " + std::to_string(rows[i]) +
                                  " does not fit in " + std::to_string(n) +
                                  " bits");
    }
  }
  return BitRowMatrix(n, std::move(rows));
}

std::string format_row(std::uint64_t x, int n) {
  check_order(n);
  if (x > row_mask(n)) {
    throw std::invalid_argument("row value out of range: " + std::to_string(x) +
                                " does not fit in " + std::to_string(n) +
                                " bits");
  }
  std::string out(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j) {
    if (bit_value(x, static_cast<unsigned>(n - 1 - j))) {
      out[static_cast<std::size_t>(j)] = '1';
    }
  }
  return out;
}

ParsedRow parse_row(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty row text");
  }
  if (text.size() > static_cast<std::size_t>(kMaxOrder)) {
    throw std::invalid_argument("row text too long: " +
                                std::to_string(text.size()) +
                                " characters (max " +
                                std::to_string(kMaxOrder) + ")");
  }
  ParsedRow out;
  out.width = static_cast<int>(text.size());
  for (std::size_t j = 0; j < text.size(); ++j) {
    const char ch = text[j];
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("illegal character '" + std::string(1, ch) +
                                  "' at column " + std::to_string(j + 1) +
                                  ": expected '0' or '1'");
    }
    out.word = (out.word << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return out;
}

std::string render(const BitRowMatrix& m, RenderSpec spec) {
  const int n = m.order();
  std::string out;
  switch (spec) {
    case RenderSpec::Grid:
      for (int r = 0; r < n; ++r) {
        out += format_row(m.row(r), n);
        out += '\n';
      }
      break;
    case RenderSpec::Bitmap:
      out += "P1\n";
      out += std::to_string(n) + ' ' + std::to_string(n) + '\n';
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          if (c > 0) out += ' ';
          out += static_cast<char>('0' + m.cell(r, c));
        }
        out += '\n';
      }
      break;
    case RenderSpec::Records:
      out += "{\"order\":" + std::to_string(n) + ",\"rows\":[";
      for (int r = 0; r < n; ++r) {
        if (r > 0) out += ',';
        out += std::to_string(m.row(r));
      }
      out += "]}\n";
      break;
  }
  return out;
}

}  // namespace binweave
