#pragma once

// Grids, tables and their CSV/JSON renderings.
//
// CSV: header line naming every column, comma separated, LF endings, numbers
// with 17 significant digits ("inf"/"nan" for non-finite values).
// JSON: {"config": {...}, "rows": [{column: value, ...}, ...]} with non-finite
// numbers written as null.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bcsee/dos.hpp"

namespace bcsee {

enum class GridSpacing { linear, log_symmetric };

struct GridSpec {
  double min = -5.0;
  double max = 5.0;
  std::size_t points = 101;
  GridSpacing spacing = GridSpacing::linear;
  /// Smallest |xi| of a log-symmetric grid; 0 picks 1e-3 * min(|min|, max).
  double log_floor = 0.0;
};

/// Parses "min:max:points". Throws InputError.
GridSpec parse_grid(const std::string& text);

/// Throws InputError unless points >= 2 and min < max. A log-symmetric grid
/// needs min < 0 < max; it places 0 in the middle when points is odd and
/// spaces |xi| logarithmically from the floor out to each end.
std::vector<double> make_grid(const GridSpec& spec);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws InputError if absent.
  std::size_t column(const std::string& name) const;
};

using ConfigValue = std::variant<bool, std::int64_t, double, std::string, std::vector<double>>;
using ConfigEcho = std::vector<std::pair<std::string, ConfigValue>>;

/// "%.17g", with "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double x);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table, const ConfigEcho& config);

/// Two-column (xi, g) CSV, optional header line, '#' comments skipped.
DosModel load_dos_csv(const std::filesystem::path& path);

}  // namespace bcsee
