#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lovelieb {

/// Rectangular numeric table with '#'-prefixed "key: value" metadata lines.
struct OutputTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_meta(std::string key, std::string value);
  void add_row(std::vector<double> row);
  /// Column index by name; ParameterError if absent.
  std::size_t column(const std::string& name) const;
  /// Metadata value by key, empty if absent.
  std::string meta(const std::string& key) const;

  /// Throws NumericalError on non-finite cells.
  void write(std::ostream& os) const;
};

/// 12 significant digits, "%.12g".
std::string format_number(double v);

OutputTable read_table(std::istream& is);

/// "start:stop:count" (inclusive, count >= 1) or a comma-separated list.
std::vector<double> parse_values(const std::string& text);

}  // namespace lovelieb
