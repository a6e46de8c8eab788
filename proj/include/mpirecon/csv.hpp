#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mpirecon {

/// Numeric CSV table: one header line of column names, then rows of numbers.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Parses a numeric CSV. Rows must have as many fields as the header; blank
/// lines are skipped.
CsvTable read_csv(std::istream& in);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

void write_csv_row(std::ostream& out, std::initializer_list<double> values);
void write_csv_row(std::ostream& out, std::span<const double> values);

}  // namespace mpirecon
