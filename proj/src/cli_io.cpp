#include "coopdecay/cli_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include "coopdecay/config.hpp"

namespace coopdecay {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(std::ostream& os, const CsvTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  if (!std::getline(is, line)) throw DomainError("read_csv: missing header row");
  std::stringstream header(line);
  for (std::string cell; std::getline(header, cell, ',');) table.header.push_back(cell);
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw DomainError("read_csv: non-numeric cell '" + cell + "'");
      }
    }
    if (row.size() != table.header.size()) throw DomainError("read_csv: row width differs from header");
    table.rows.push_back(std::move(row));
  }
  return table;
}

double parse_angle(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s.empty()) throw DomainError("empty angle");
  if (s == "magic") return kMagicAngle;

  static const std::regex pi_form(R"(^([+-]?)([0-9]*\.?[0-9]*)\*?pi(?:/([0-9]*\.?[0-9]+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    double coef = m[2].length() ? std::stod(m[2].str()) : 1.0;
    if (m[1] == "-") coef = -coef;
    const double den = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (den == 0.0) throw DomainError("angle '" + std::string(text) + "' divides by zero");
    return coef * kPi / den;
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("cannot parse angle '" + std::string(text) + "'");
  return value;
}

}  // namespace coopdecay
