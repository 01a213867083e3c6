#include "bcsee/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bcsee/errors.hpp"
#include "json.hpp"

namespace bcsee {

namespace {

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError("cannot parse " + what + " from '" + s + "'");
  }
  if (used != s.size()) throw InputError("trailing characters in " + what + " '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

nlohmann::ordered_json number_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw InputError("grid must look like min:max:points, got '" + text + "'");
  }
  GridSpec g;
  g.min = parse_double(text.substr(0, first), "grid min");
  g.max = parse_double(text.substr(first + 1, second - first - 1), "grid max");
  const double pts = parse_double(text.substr(second + 1), "grid points");
  if (!(pts >= 0.0) || pts != std::floor(pts)) throw InputError("grid points must be a whole number");
  g.points = static_cast<std::size_t>(pts);
  return g;
}

std::vector<double> make_grid(const GridSpec& spec) {
  if (spec.points < 2) throw InputError("grid needs at least 2 points");
  if (!std::isfinite(spec.min) || !std::isfinite(spec.max) || !(spec.min < spec.max)) {
    throw InputError("grid needs finite min < max");
  }
  std::vector<double> out;
  out.reserve(spec.points);
  if (spec.spacing == GridSpacing::linear) {
    const double step = (spec.max - spec.min) / static_cast<double>(spec.points - 1);
    for (std::size_t i = 0; i + 1 < spec.points; ++i) {
      out.push_back(spec.min + step * static_cast<double>(i));
    }
    out.push_back(spec.max);
    return out;
  }

  if (!(spec.min < 0.0 && spec.max > 0.0)) {
    throw InputError("log-symmetric grid needs min < 0 < max");
  }
  const double floor = spec.log_floor > 0.0 ? spec.log_floor
                                            : 1e-3 * std::min(-spec.min, spec.max);
  if (!(floor < -spec.min && floor < spec.max)) {
    throw InputError("log-symmetric floor must be below both |min| and max");
  }
  const bool centre = spec.points % 2 == 1;
  const std::size_t rest = spec.points - (centre ? 1 : 0);
  const std::size_t n_neg = rest / 2;
  const std::size_t n_pos = rest - n_neg;
  // Magnitudes floor .. edge, log spaced; a single point sits at the edge.
  auto side = [floor](double edge, std::size_t n) {
    std::vector<double> mags(n);
    if (n == 1) {
      mags[0] = edge;
      return mags;
    }
    const double lo = std::log(floor);
    const double hi = std::log(edge);
    for (std::size_t i = 0; i < n; ++i) {
      mags[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    mags.back() = edge;
    return mags;
  };
  const auto neg = side(-spec.min, n_neg);
  const auto pos = side(spec.max, n_pos);
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) out.push_back(-*it);
  if (centre) out.push_back(0.0);
  for (double m : pos) out.push_back(m);
  return out;
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw InputError("no column named '" + name + "'");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_number(row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table, const ConfigEcho& config) {
  nlohmann::ordered_json doc;
  auto& cfg = doc["config"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) {
    std::visit(
        [&cfg, &key](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            cfg[key] = number_json(v);
          } else if constexpr (std::is_same_v<T, std::vector<double>>) {
            auto arr = nlohmann::ordered_json::array();
            for (double x : v) arr.push_back(number_json(x));
            cfg[key] = arr;
          } else {
            cfg[key] = v;
          }
        },
        value);
  }
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = number_json(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

DosModel load_dos_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open DOS table '" + path.string() + "'");
  std::vector<double> xi;
  std::vector<double> g;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw InputError("DOS table line " + std::to_string(line_no) + " needs two columns");
    }
    const auto a = trim(line.substr(0, comma));
    const auto b = trim(line.substr(comma + 1));
    try {
      const double x = parse_double(a, "xi");
      const double y = parse_double(b, "g");
      xi.push_back(x);
      g.push_back(y);
    } catch (const InputError&) {
      // A non-numeric first data line is the header.
      if (!xi.empty() || header_seen) {
        throw InputError("DOS table line " + std::to_string(line_no) + " is not numeric");
      }
      header_seen = true;
    }
  }
  return DosModel::tabulated(std::move(xi), std::move(g));
}

}  // namespace bcsee
