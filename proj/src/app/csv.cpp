#include "xyquench/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace xyq::csv {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != header.size()) {
    throw std::invalid_argument("row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double value) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

Cell real_or_missing(double value) {
  if (std::isnan(value)) {
    return std::monostate{};
  }
  return value;
}

namespace {

std::string quote_if_needed(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string render(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return quote_if_needed(s); }
  };
  return std::visit(Visitor{}, cell);
}

template <class Range>
void write_line(std::ostream& os, const Range& cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) {
      os << ',';
    }
    first = false;
    os << render(Cell(c));
  }
  os << '\n';
}

std::vector<std::string> split_record(std::istream& is, bool& ok) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool any = false;
  char c;
  ok = false;
  while (is.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (is.peek() == '"') {
          is.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      ok = true;
      return fields;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (any) {
    fields.push_back(std::move(field));
    ok = true;
  }
  return fields;
}

}  // namespace

void write(std::ostream& os, const Table& table) {
  write_line(os, table.header);
  for (const auto& row : table.rows) {
    write_line(os, row);
  }
}

std::string to_string(const Table& table) {
  std::ostringstream os;
  write(os, table);
  return os.str();
}

Table read(std::istream& is) {
  Table table;
  bool ok = false;
  table.header = split_record(is, ok);
  if (!ok) {
    throw std::runtime_error("empty CSV input");
  }
  while (true) {
    std::vector<std::string> fields = split_record(is, ok);
    if (!ok) {
      break;
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (auto& f : fields) {
      if (f.empty()) {
        row.emplace_back(std::monostate{});
      } else {
        row.emplace_back(std::move(f));
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

std::optional<double> parse_double(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    return *d;
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return static_cast<double>(*i);
  }
  if (const auto* s = std::get_if<std::string>(&cell)) {
    double value = 0.0;
    const char* first = s->data();
    const char* last = first + s->size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc() && ptr == last) {
      return value;
    }
  }
  return std::nullopt;
}

}  // namespace xyq::csv
