#include "lovelieb/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "lovelieb/errors.hpp"

namespace lovelieb {

void OutputTable::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void OutputTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw ParameterError("row length does not match the header");
  rows.push_back(std::move(row));
}

std::size_t OutputTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw ParameterError("no column named '" + name + "'");
}

std::string OutputTable::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return {};
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void OutputTable::write(std::ostream& os) const {
  for (const auto& [k, v] : metadata) os << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!std::isfinite(row[i])) throw NumericalError("non-finite value in column " + columns[i]);
      os << (i ? "," : "") << format_number(row[i]);
    }
    os << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParameterError("not a number: '" + s + "'");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size()) throw ParameterError("not a number: '" + s + "'");
  return v;
}

}  // namespace

OutputTable read_table(std::istream& is) {
  OutputTable t;
  std::string line;
  bool header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto body = line.substr(line.find_first_not_of("# "));
      const auto colon = body.find(": ");
      if (colon == std::string::npos) {
        t.add_meta(body, "");
      } else {
        t.add_meta(body.substr(0, colon), body.substr(colon + 2));
      }
      continue;
    }
    if (!header) {
      t.columns = split(line, ',');
      header = true;
      continue;
    }
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) row.push_back(parse_double(cell));
    t.add_row(std::move(row));
  }
  if (!header) throw ParameterError("table has no header row");
  return t;
}

std::vector<double> parse_values(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ParameterError("range must be start:stop:count");
    const double a = parse_double(parts[0]);
    const double b = parse_double(parts[1]);
    const double c = parse_double(parts[2]);
    if (!(c >= 1.0) || c != std::floor(c)) throw ParameterError("range count must be a positive integer");
    const int n = static_cast<int>(c);
    if (n == 1) return {a};
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k) v[k] = a + (b - a) * k / (n - 1);
    v.back() = b;
    return v;
  }
  std::vector<double> v;
  for (const auto& s : split(text, ',')) v.push_back(parse_double(s));
  if (v.empty()) throw ParameterError("empty value list");
  return v;
}

}  // namespace lovelieb
