#include "bcsee/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include "bcsee/errors.hpp"
#include "bcsee/observables.hpp"
#include "bcsee/thermal.hpp"
#include "json.hpp"

namespace bcsee {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

QuadratureOptions quadrature_options(const RunConfig& config) {
  QuadratureOptions q;
  q.abs_tolerance = config.tolerance;
  return q;
}

struct ScanPoint {
  double delta;
  double debye;
  double ratio;
};

std::vector<double> scan_row(const RunConfig& config, const ScanPoint& pt) {
  ModelParams p = config.params;
  p.delta = pt.delta;
  p.debye = pt.debye;
  p.validate();
  const auto dos = make_dos(config.dos, p);
  const auto opts = quadrature_options(config);
  const auto report = observables_report(dos, p, opts);
  const double rel = std::fabs(report.entropy_total - report.entropy_area_law) /
                     report.entropy_area_law;
  return {pt.delta,
          pt.debye,
          pt.ratio,
          report.entropy_total,
          report.entropy_area_law,
          rel,
          report.entropy_total / report.entropy_area_law,
          report.quadrature_error_estimate,
          report.variance_up,
          report.variance_total,
          report.entropy_total / report.variance_total,
          report.mep};
}

}  // namespace

DosModel make_dos(const DosSelector& selector, const ModelParams& params) {
  if (selector.kind == "constant") return DosModel::constant(selector.g0);
  if (selector.kind == "power-law-3d") return DosModel::power_law_3d(params.mu, selector.scale);
  if (selector.kind == "table") {
    if (selector.file.empty()) throw InputError("--dos table needs --dos-file");
    return load_dos_csv(selector.file);
  }
  throw InputError("unknown DOS kind '" + selector.kind +
                   "' (expected constant, power-law-3d or table)");
}

void RunConfig::validate() const {
  static const std::vector<std::string> kCommands = {"spectrum", "beta-eff", "entropy",
                                                     "fluctuations", "scan", "oracle-check"};
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
    throw InputError("unknown command '" + command + "'");
  }
  params.validate();
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw InputError("tolerance must be > 0");
  if (grid.points < 2) throw InputError("grid needs at least 2 points");
  if (!(grid.min < grid.max)) throw InputError("grid needs min < max");
  if (std::isnan(check_tolerance)) throw InputError("check tolerance must be a number");
  if (command == "scan") {
    if (scan_deltas.empty()) throw InputError("scan needs a non-empty --deltas list");
    if (!scan_debye_ratios.empty() && !scan_debyes.empty()) {
      throw InputError("give either --debye-ratios or --debyes, not both");
    }
  }
}

Table spectrum_table(const RunConfig& config) {
  const auto& p = config.params;
  const auto grid = make_grid(config.grid);
  const auto points = spectrum_grid(grid, p);
  const auto dos = make_dos(config.dos, p);
  const double beta0 = p.delta > 0.0 ? canonical_temperatures(p.delta).beta_eff_0 : kNaN;

  Table t;
  t.columns = {"xi",      "u2",   "v2", "entropy", "beta_eff", "fermi_canonical",
               "canonical_residual", "dos", "weighted_entropy"};
  for (const auto& pt : points) {
    const double fermi = p.delta > 0.0 ? fermi_occupation(pt.xi, beta0) : kNaN;
    const double g = dos.evaluate(pt.xi);
    t.rows.push_back({pt.xi, pt.u2, pt.v2, pt.entropy, pt.beta_eff, fermi, pt.v2 - fermi, g,
                      pt.entropy * g});
  }
  return t;
}

Table beta_eff_table(const RunConfig& config) {
  const double delta = config.params.delta;
  const auto temps = canonical_temperatures(delta);
  Table t;
  t.columns = {"xi", "beta_eff", "beta_eff_delta", "beta_eff_0", "beta_c", "relative_gap"};
  for (double xi : make_grid(config.grid)) {
    const double b = beta_eff(xi, delta);
    t.rows.push_back({xi, b, b * delta, temps.beta_eff_0, temps.beta_c, temps.relative_gap});
  }
  return t;
}

Table entropy_table(const RunConfig& config) {
  const auto& p = config.params;
  const auto dos = make_dos(config.dos, p);
  const auto s = entropy_integral(dos, p, quadrature_options(config));
  const double g0 = dos.at_fermi_surface();
  const double area = entropy_area_law(g0, p.delta);
  Table t;
  t.columns = {"delta",      "debye",     "mu",           "g0",
               "S_integral", "S_area_law", "relative_gap", "error_estimate"};
  t.rows.push_back({p.delta, p.debye, p.mu, g0, s.value, area, std::fabs(s.value - area) / area,
                    s.error});
  return t;
}

Table fluctuations_table(const RunConfig& config) {
  const auto& p = config.params;
  const auto dos = make_dos(config.dos, p);
  const auto opts = quadrature_options(config);
  const auto report = observables_report(dos, p, opts);
  const double g0 = dos.at_fermi_surface();
  const double closed = dos.kind() == DosKind::constant
                            ? 0.5 * g0 * p.delta * std::atan(p.debye / p.delta)
                            : kNaN;
  Table t;
  t.columns = {"delta",        "debye",        "mu",  "g0",           "sigma_up_sq",
               "sigma_total_sq", "sigma_up_sq_closed_form", "S_integral", "entropy_ratio",
               "mep",          "error_estimate"};
  t.rows.push_back({p.delta, p.debye, p.mu, g0, report.variance_up, report.variance_total, closed,
                    report.entropy_total, report.entropy_total / report.variance_total,
                    report.mep, report.quadrature_error_estimate});
  return t;
}

Table scan_table(const RunConfig& config) {
  if (config.scan_deltas.empty()) throw InputError("scan needs a non-empty --deltas list");
  std::vector<ScanPoint> points;
  for (double delta : config.scan_deltas) {
    if (!config.scan_debye_ratios.empty()) {
      for (double r : config.scan_debye_ratios) points.push_back({delta, r * delta, r});
    } else if (!config.scan_debyes.empty()) {
      for (double d : config.scan_debyes) points.push_back({delta, d, d / delta});
    } else {
      points.push_back({delta, config.params.debye, config.params.debye / delta});
    }
  }

  Table t;
  t.columns = {"delta",         "debye",      "debye_ratio",   "S_integral",
               "S_area_law",    "relative_gap", "S_over_area_law", "error_estimate",
               "sigma_up_sq",   "sigma_total_sq", "entropy_ratio", "mep"};
  t.rows.resize(points.size());

  // Points are independent; evaluate in batches and store by index so row
  // order never depends on scheduling.
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < points.size(); start += workers) {
    const std::size_t stop = std::min(points.size(), start + workers);
    std::vector<std::future<std::vector<double>>> jobs;
    for (std::size_t i = start; i < stop; ++i) {
      jobs.push_back(std::async(std::launch::async, scan_row, std::cref(config), points[i]));
    }
    for (std::size_t i = start; i < stop; ++i) t.rows[i] = jobs[i - start].get();
  }
  return t;
}

OracleCheckReport oracle_check(const RunConfig& config) {
  OracleCheckConfig oc;
  oc.params = config.params;
  oc.min_modes = config.oracle_min_modes;
  oc.max_modes = config.oracle_max_modes;
  oc.trials = config.oracle_trials;
  oc.seed = config.seed;
  oc.tolerance = config.check_tolerance;
  return run_oracle_checks(oc);
}

ConfigEcho config_echo(const RunConfig& config) {
  ConfigEcho e;
  e.emplace_back("command", config.command);
  e.emplace_back("delta", config.params.delta);
  e.emplace_back("debye", config.params.debye);
  e.emplace_back("mu", config.params.mu);
  e.emplace_back("dos", config.dos.kind);
  e.emplace_back("g0", config.dos.g0);
  e.emplace_back("dos_scale", config.dos.scale);
  e.emplace_back("dos_file", config.dos.file);
  e.emplace_back("grid_min", config.grid.min);
  e.emplace_back("grid_max", config.grid.max);
  e.emplace_back("grid_points", static_cast<std::int64_t>(config.grid.points));
  e.emplace_back("grid_spacing", std::string(config.grid.spacing == GridSpacing::linear
                                                 ? "linear"
                                                 : "log-symmetric"));
  e.emplace_back("log_floor", config.grid.log_floor);
  e.emplace_back("tolerance", config.tolerance);
  e.emplace_back("seed", static_cast<std::int64_t>(config.seed));
  if (config.command == "scan") {
    e.emplace_back("deltas", config.scan_deltas);
    e.emplace_back("debye_ratios", config.scan_debye_ratios);
    e.emplace_back("debyes", config.scan_debyes);
  }
  if (config.command == "oracle-check") {
    e.emplace_back("min_modes", static_cast<std::int64_t>(config.oracle_min_modes));
    e.emplace_back("max_modes", static_cast<std::int64_t>(config.oracle_max_modes));
    e.emplace_back("trials", static_cast<std::int64_t>(config.oracle_trials));
    e.emplace_back("check_tolerance", config.check_tolerance);
  }
  return e;
}

std::string render_oracle_report(const OracleCheckReport& report, const RunConfig& config) {
  nlohmann::ordered_json doc;
  doc["passed"] = report.passed();
  doc["failures"] = report.failures;
  auto failed = nlohmann::ordered_json::array();
  std::vector<std::string> seen;
  for (const auto& c : report.checks) {
    if (!c.passed && std::find(seen.begin(), seen.end(), c.name) == seen.end()) {
      seen.push_back(c.name);
      failed.push_back(c.name);
    }
  }
  doc["failed_invariants"] = failed;

  std::ostringstream cfg_text;
  write_json(cfg_text, Table{}, config_echo(config));
  doc["config"] = nlohmann::ordered_json::parse(cfg_text.str())["config"];

  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"n_modes", c.n_modes},
                      {"trial", c.trial},
                      {"value", c.value},
                      {"bound", c.bound},
                      {"passed", c.passed}});
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

CommandResult run_command(const RunConfig& config) {
  config.validate();
  if (config.command == "oracle-check") {
    const auto report = oracle_check(config);
    return {render_oracle_report(report, config),
            report.passed() ? kExitOk : kExitCheckFailed};
  }

  Table table;
  if (config.command == "spectrum") {
    table = spectrum_table(config);
  } else if (config.command == "beta-eff") {
    table = beta_eff_table(config);
  } else if (config.command == "entropy") {
    table = entropy_table(config);
  } else if (config.command == "fluctuations") {
    table = fluctuations_table(config);
  } else {
    table = scan_table(config);
  }

  std::ostringstream out;
  if (config.format == OutputFormat::csv) {
    write_csv(out, table);
  } else {
    write_json(out, table, config_echo(config));
  }
  return {out.str(), kExitOk};
}

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const NumericalError*>(&e)) return kExitNumerical;
  if (dynamic_cast<const ParameterError*>(&e) || dynamic_cast<const InputError*>(&e) ||
      dynamic_cast<const CapacityError*>(&e)) {
    return kExitUsage;
  }
  return kExitNumerical;
}

std::string resolve_output_path(const std::string& output) {
  if (output.empty() || output == "-") return output;
  const std::filesystem::path path(output);
  const char* dir = std::getenv("BCSEE_OUTPUT_DIR");
  if (dir != nullptr && *dir != '\0' && path.is_relative()) {
    return (std::filesystem::path(dir) / path).string();
  }
  return output;
}

void emit(const RunConfig& config, const std::string& text) {
  const auto path = resolve_output_path(config.output);
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write output file '" + path + "'");
  out << text;
  if (!out) throw InputError("failed while writing '" + path + "'");
}

}  // namespace bcsee
