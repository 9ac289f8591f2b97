#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace xyq::csv {

/// Empty cell (missing value), real, integer, or text.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Shortest text that reads back to the same double: 17 significant digits.
std::string format_double(double value);

/// NaN becomes an empty cell.
Cell real_or_missing(double value);

/// Header line plus one line per row, comma separated, LF terminated.
/// Text containing separators or quotes is quoted RFC-4180 style.
void write(std::ostream& os, const Table& table);
std::string to_string(const Table& table);

/// Reads a table written by write(); every cell comes back as text
/// (empty cells as std::monostate).
Table read(std::istream& is);

std::optional<double> parse_double(const Cell& cell);

}  // namespace xyq::csv
