#pragma once

#include <istream>
#include <string>
#include <vector>

namespace nmcd {

// One numeric value per line; blank lines are skipped. Parse failures throw
// std::invalid_argument naming the line number.
std::vector<double> read_values_lines(std::istream& in);

// Numeric column of a comma-separated file with a header row. Quoted fields
// are unescaped per the usual CSV rules.
std::vector<double> read_csv_column(std::istream& in, const std::string& column);

}  // namespace nmcd
