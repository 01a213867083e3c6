// bcsee: entanglement spectrum, effective temperatures, spin entanglement
// entropy and number fluctuations of the spin-partitioned BCS ground state.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bcsee/commands.hpp"
#include "bcsee/errors.hpp"

namespace {

// CLI11 reads "-5:5:101" as a short flag; glue such values onto their option.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--grid" && i + 1 < argc) {
      a += "=" + std::string(argv[++i]);
    }
    args.push_back(a);
  }
  // CLI11 parses a reversed vector.
  return {args.rbegin(), args.rend()};
}

void add_model_options(CLI::App* cmd, bcsee::RunConfig& cfg) {
  cmd->add_option("--delta", cfg.params.delta, "Pairing energy (>= 0)")->capture_default_str();
  cmd->add_option("--debye", cfg.params.debye, "Debye energy (> 0)")->capture_default_str();
  cmd->add_option("--mu", cfg.params.mu, "Fermi energy (> 0)")->capture_default_str();
}

void add_dos_options(CLI::App* cmd, bcsee::RunConfig& cfg) {
  cmd->add_option("--dos", cfg.dos.kind, "Density of states: constant | power-law-3d | table")
      ->capture_default_str();
  cmd->add_option("--g0", cfg.dos.g0, "Constant density of states g(0)")->capture_default_str();
  cmd->add_option("--dos-scale", cfg.dos.scale, "Prefactor of the power-law DOS")
      ->capture_default_str();
  cmd->add_option("--dos-file", cfg.dos.file, "Two-column CSV (xi, g) for --dos table");
}

void add_grid_options(CLI::App* cmd, bcsee::RunConfig& cfg, std::string& grid_text,
                      bool& log_symmetric) {
  cmd->add_option("--grid", grid_text, "Orbital-energy grid min:max:points")
      ->capture_default_str();
  cmd->add_flag("--log-symmetric", log_symmetric,
                "Sign-symmetric log-spaced grid, dense near xi = 0");
  cmd->add_option("--log-floor", cfg.grid.log_floor,
                  "Smallest |xi| of a log-symmetric grid (default 1e-3 of the range)");
}

void add_output_options(CLI::App* cmd, bcsee::RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format: csv | json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, bcsee::OutputFormat>{{"csv", bcsee::OutputFormat::csv},
                                                     {"json", bcsee::OutputFormat::json}},
          CLI::ignore_case));
  cmd->add_option("-o,--output", cfg.output,
                  "Output file (default stdout; relative paths honour BCSEE_OUTPUT_DIR)");
}

}  // namespace

int main(int argc, char** argv) {
  bcsee::RunConfig cfg;
  std::string grid_text = "-5:5:101";
  bool log_symmetric = false;

  CLI::App app{"Spin-partitioned BCS ground-state entanglement toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto* spectrum = app.add_subcommand("spectrum", "Entanglement spectrum table over an xi grid");
  auto* beta = app.add_subcommand("beta-eff", "Orbital and canonical effective temperatures");
  auto* entropy = app.add_subcommand("entropy", "Spin entanglement entropy vs the area law");
  auto* fluct = app.add_subcommand("fluctuations", "Number variances, entropy ratio and MEP");
  auto* scan = app.add_subcommand("scan", "Observables over a (delta, debye) grid");
  auto* oracle = app.add_subcommand("oracle-check", "Exact partial-trace equivalence suite");

  for (auto* cmd : {spectrum, beta, entropy, fluct, scan, oracle}) add_model_options(cmd, cfg);
  for (auto* cmd : {spectrum, entropy, fluct, scan}) add_dos_options(cmd, cfg);
  for (auto* cmd : {spectrum, beta}) add_grid_options(cmd, cfg, grid_text, log_symmetric);
  for (auto* cmd : {spectrum, beta, entropy, fluct, scan, oracle}) add_output_options(cmd, cfg);
  for (auto* cmd : {entropy, fluct, scan}) {
    cmd->add_option("--tolerance", cfg.tolerance, "Absolute quadrature tolerance")
        ->capture_default_str();
  }

  const auto non_empty = [](const std::string& s) {
    return s.empty() ? std::string("empty list entry") : std::string();
  };
  scan->add_option("--deltas", cfg.scan_deltas, "Comma-separated pairing energies")
      ->delimiter(',')
      ->check(non_empty);
  scan->add_option("--debye-ratios", cfg.scan_debye_ratios,
                   "Comma-separated debye/delta ratios")
      ->delimiter(',')
      ->check(non_empty);
  scan->add_option("--debyes", cfg.scan_debyes, "Comma-separated absolute Debye energies")
      ->delimiter(',')
      ->check(non_empty);

  oracle->add_option("--seed", cfg.seed, "Seed for random orbital energies")->capture_default_str();
  oracle->add_option("--min-modes", cfg.oracle_min_modes, "Smallest pair-mode count")
      ->capture_default_str();
  oracle->add_option("--max-modes", cfg.oracle_max_modes, "Largest pair-mode count (<= 8)")
      ->capture_default_str();
  oracle->add_option("--trials", cfg.oracle_trials, "Random configurations per mode count")
      ->capture_default_str();
  oracle->add_option("--check-tolerance", cfg.check_tolerance,
                     "Agreement tolerance; a negative value forces failures")
      ->capture_default_str();

  try {
    auto args = normalize_args(argc, argv);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bcsee::kExitUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.grid = bcsee::parse_grid(grid_text);
    cfg.grid.spacing = log_symmetric ? bcsee::GridSpacing::log_symmetric
                                     : bcsee::GridSpacing::linear;
    if (cfg.command != "spectrum" && cfg.command != "beta-eff") {
      // Grid flags do not apply; keep the echo free of misleading values.
      cfg.grid = bcsee::GridSpec{};
    }
    const auto result = bcsee::run_command(cfg);
    bcsee::emit(cfg, result.text);
    if (result.exit_code == bcsee::kExitCheckFailed) {
      std::cerr << "bcsee: oracle checks failed\n";
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "bcsee: " << e.what() << '\n';
    return bcsee::exit_code_for(e);
  }
}
