#include "nmcd/io.hpp"

#include <charconv>
#include <stdexcept>

namespace nmcd {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view field, std::size_t line_no) {
  const std::string_view s = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": not a number: '" +
                                std::string(field) + "'");
  }
  return value;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t p = 0; p < line.size(); ++p) {
    const char c = line[p];
    if (quoted) {
      if (c == '"') {
        if (p + 1 < line.size() && line[p + 1] == '"') {
          cur += '"';
          ++p;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::vector<double> read_values_lines(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    values.push_back(parse_double(line, line_no));
  }
  return values;
}

std::vector<double> read_csv_column(std::istream& in, const std::string& column) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty csv file");
  const std::vector<std::string> header = split_csv_row(line);
  std::size_t col = header.size();
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (std::string(trim(header[k])) == column) {
      col = k;
      break;
    }
  }
  if (col == header.size()) throw std::invalid_argument("column not found: '" + column + "'");

  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_row(line);
    if (col >= fields.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": too few fields");
    }
    values.push_back(parse_double(fields[col], line_no));
  }
  return values;
}

}  // namespace nmcd
