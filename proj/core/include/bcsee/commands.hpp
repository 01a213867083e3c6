#pragma once

// Command implementations behind the bcsee tool. Each command produces a Table
// (or an oracle report) from a RunConfig; run_command renders it.
//
// Exit codes: 0 success, 1 check failure, 2 usage/parameter error,
// 3 numerical failure.

#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include "bcsee/amplitudes.hpp"
#include "bcsee/dos.hpp"
#include "bcsee/io.hpp"
#include "bcsee/oracle.hpp"

namespace bcsee {

enum class OutputFormat { csv, json };

struct DosSelector {
  std::string kind = "constant";  ///< constant | power-law-3d | table
  double g0 = 1.0;
  double scale = 1.0;   ///< multiplier for power-law-3d
  std::string file;     ///< CSV path for table
};

/// Power-law DOS uses params.mu. Throws InputError for an unknown kind.
DosModel make_dos(const DosSelector& selector, const ModelParams& params);

struct RunConfig {
  std::string command = "spectrum";
  ModelParams params{1.0, 10.0, 100.0};
  DosSelector dos;
  GridSpec grid;
  OutputFormat format = OutputFormat::csv;
  std::string output;  ///< empty or "-" for standard output
  double tolerance = 1e-10;
  std::uint64_t seed = 20240501;

  // scan
  std::vector<double> scan_deltas;
  std::vector<double> scan_debye_ratios;  ///< debye = ratio * delta
  std::vector<double> scan_debyes;        ///< absolute debye values

  // oracle-check
  std::size_t oracle_min_modes = 1;
  std::size_t oracle_max_modes = 6;
  std::size_t oracle_trials = 20;
  double check_tolerance = 1e-12;  ///< negative values force failures (harness hook)

  /// Throws InputError on invalid settings, ParameterError on invalid params.
  void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Columns: xi u2 v2 entropy beta_eff fermi_canonical canonical_residual dos
/// weighted_entropy. Canonical columns are nan when delta == 0.
Table spectrum_table(const RunConfig& config);
/// Columns: xi beta_eff beta_eff_delta beta_eff_0 beta_c relative_gap.
Table beta_eff_table(const RunConfig& config);
/// One row: delta debye mu g0 S_integral S_area_law relative_gap error_estimate.
Table entropy_table(const RunConfig& config);
/// One row: delta debye mu g0 sigma_up_sq sigma_total_sq sigma_up_sq_closed_form
/// S_integral entropy_ratio mep error_estimate.
Table fluctuations_table(const RunConfig& config);
/// One row per (delta, debye) pair, delta-major.
Table scan_table(const RunConfig& config);
OracleCheckReport oracle_check(const RunConfig& config);

ConfigEcho config_echo(const RunConfig& config);

/// oracle-check always renders JSON: {"passed", "failures", "failed_invariants",
/// "config", "checks"}.
std::string render_oracle_report(const OracleCheckReport& report, const RunConfig& config);

struct CommandResult {
  std::string text;
  int exit_code = kExitOk;
};

/// Validates, dispatches and renders. Exceptions propagate to the caller.
CommandResult run_command(const RunConfig& config);

/// Exit code for an exception raised by run_command.
int exit_code_for(const std::exception& e) noexcept;

/// Relative output paths resolve under $BCSEE_OUTPUT_DIR when it is set.
std::string resolve_output_path(const std::string& output);

/// Writes text to config.output (or standard output).
void emit(const RunConfig& config, const std::string& text);

}  // namespace bcsee
