#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace coopdecay {

inline constexpr std::string_view kVersion = "0.1.0";

/// 12 significant digits, shortest of fixed/scientific ("%.12g").
std::string format_number(double value);

/// Header plus numeric rows; written comma-separated with LF line endings.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const CsvTable& table);
CsvTable read_csv(std::istream& is);

/// Parses radians given as a number, a multiple/fraction of pi ("pi/2",
/// "3pi/2", "2*pi", "-pi/4") or the token "magic" (arccos(1/sqrt 3)).
double parse_angle(std::string_view text);

struct NamedTable {
  std::string filename;
  CsvTable table;
};

/// Plot-ready datasets for figure n (1..7), parameters fixed to that figure.
/// The result does not depend on the thread count.
std::vector<NamedTable> figure_datasets(int figure, int threads);

/// Command-line entry point. Returns the process exit code: 0 on success,
/// 1 when a computation fails, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coopdecay
