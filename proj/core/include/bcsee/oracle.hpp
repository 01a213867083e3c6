#pragma once

// Brute-force partial-trace oracle.
//
// Builds the N-pair-mode BCS state as a dense vector over all 4^N occupancy
// patterns, traces out the spin-down electrons numerically and diagonalizes
// the resulting 2^N x 2^N matrix. Nothing here uses the product structure of
// the reduced state, so it is an independent check on the analytic modules.
//
// Basis ordering: mode-major, little-endian over modes. Mode k owns bit 2k
// (spin-up occupancy n_{k up}) and bit 2k+1 (spin-down occupancy n_{-k down}).
// The reduced spin-up basis uses bit k for n_{k up}.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bcsee/amplitudes.hpp"

namespace bcsee {

inline constexpr std::size_t kMaxOracleModes = 8;

/// Dense row-major square matrix.
struct ComplexMatrix {
  std::size_t dim = 0;
  std::vector<std::complex<double>> data;

  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data[i * dim + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
    return data[i * dim + j];
  }
};

struct OracleState {
  std::size_t n_modes = 0;
  std::vector<double> xis;
  std::vector<std::complex<double>> amplitudes;  ///< length 4^N
  ComplexMatrix rho_up;                          ///< 2^N x 2^N
};

/// Pair-mode state with real nonnegative u, v; v_k picks up e^{i phases[k]}
/// when phases is non-empty (must then have one entry per mode). rho_up is
/// filled by partial_trace_down. Throws CapacityError unless 1 <= N <= 8.
OracleState build_state(std::span<const double> xis, const ModelParams& params,
                        std::span<const double> phases = {});

/// rho_up[a][b] = sum_d psi(a, d) conj(psi(b, d)).
ComplexMatrix partial_trace_down(const OracleState& state);

/// Ascending eigenvalues of rho_up. Throws NumericalError if the solver fails.
std::vector<double> oracle_spectrum(const OracleState& state);

/// -tr rho ln rho from the eigenvalues of rho_up.
double oracle_entropy(const OracleState& state);

/// <N_up^2> - <N_up>^2 with N_up diagonal in the occupancy basis.
double oracle_variance(const OracleState& state);

/// Ascending multiset of all products of per-mode {u^2, v^2}.
std::vector<double> product_spectrum(std::span<const double> xis, const ModelParams& params);

struct StateDiagnostics {
  double norm_deviation = 0.0;      ///< | ||psi||^2 - 1 |
  double unpaired_amplitude = 0.0;  ///< max |psi| on patterns with n_up != n_down
  double max_offdiagonal = 0.0;     ///< max |rho_up(i, j)|, i != j
  double hermiticity = 0.0;         ///< max |rho(i, j) - conj(rho(j, i))|
  double trace_deviation = 0.0;     ///< |tr rho_up - 1|
  double min_eigenvalue = 0.0;
};

StateDiagnostics diagnose(const OracleState& state);

struct OracleCheckConfig {
  ModelParams params{1.0, 10.0, 100.0};
  std::size_t min_modes = 1;
  std::size_t max_modes = 6;
  std::size_t trials = 20;
  std::uint64_t seed = 20240501;
  double tolerance = 1e-12;          ///< entropy, variance, spectrum agreement
  double offdiagonal_bound = 1e-14;  ///< rho_up off-diagonal magnitude
};

struct OracleCheck {
  std::string name;
  std::size_t n_modes = 0;
  std::size_t trial = 0;
  double value = 0.0;  ///< observed worst deviation
  double bound = 0.0;
  bool passed = false;
};

struct OracleCheckReport {
  std::vector<OracleCheck> checks;
  std::size_t failures = 0;
  bool passed() const noexcept { return failures == 0; }
};

/// Runs the oracle/analytic equivalence suite over seeded random orbital
/// energies drawn uniformly from the Debye shell.
OracleCheckReport run_oracle_checks(const OracleCheckConfig& config);

}  // namespace bcsee
