#include "bcsee/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "bcsee/errors.hpp"
#include "bcsee/observables.hpp"

namespace bcsee {

namespace {

// Places bit k of `bits` at position 2k + offset.
std::size_t spread(std::size_t bits, std::size_t n_modes, std::size_t offset) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < n_modes; ++k) {
    if ((bits >> k) & 1U) out |= std::size_t{1} << (2 * k + offset);
  }
  return out;
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.dim), static_cast<Eigen::Index>(m.dim));
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    }
  }
  return out;
}

}  // namespace

OracleState build_state(std::span<const double> xis, const ModelParams& params,
                        std::span<const double> phases) {
  params.validate();
  const std::size_t n = xis.size();
  if (n < 1 || n > kMaxOracleModes) {
    throw CapacityError("oracle supports 1 to " + std::to_string(kMaxOracleModes) +
                        " pair modes, got " + std::to_string(n));
  }
  if (!phases.empty() && phases.size() != n) throw InputError("one phase per mode required");

  std::vector<double> u(n);
  std::vector<std::complex<double>> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto w = pair_weights(xis[k], params.delta, params.debye);
    u[k] = std::sqrt(w.u2);
    v[k] = std::sqrt(w.v2) * (phases.empty() ? std::complex<double>{1.0, 0.0}
                                             : std::polar(1.0, phases[k]));
  }

  OracleState s;
  s.n_modes = n;
  s.xis.assign(xis.begin(), xis.end());
  s.amplitudes.assign(std::size_t{1} << (2 * n), {0.0, 0.0});
  // Only patterns where each mode is empty (00) or pair-filled (11) carry weight.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::complex<double> amp{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) amp *= ((mask >> k) & 1U) ? v[k] : u[k];
    s.amplitudes[spread(mask, n, 0) | spread(mask, n, 1)] = amp;
  }
  s.rho_up = partial_trace_down(s);
  return s;
}

ComplexMatrix partial_trace_down(const OracleState& state) {
  const std::size_t n = state.n_modes;
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix rho{dim, std::vector<std::complex<double>>(dim * dim, {0.0, 0.0})};
  for (std::size_t d = 0; d < dim; ++d) {
    const std::size_t down = spread(d, n, 1);
    for (std::size_t a = 0; a < dim; ++a) {
      const auto psi_a = state.amplitudes[spread(a, n, 0) | down];
      if (psi_a == std::complex<double>{}) continue;
      for (std::size_t b = 0; b < dim; ++b) {
        rho(a, b) += psi_a * std::conj(state.amplitudes[spread(b, n, 0) | down]);
      }
    }
  }
  return rho;
}

std::vector<double> oracle_spectrum(const OracleState& state) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(state.rho_up),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolve of the reduced density matrix failed", 0.0, 0.0);
  }
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

double oracle_entropy(const OracleState& state) {
  double s = 0.0;
  for (double p : oracle_spectrum(state)) {
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double oracle_variance(const OracleState& state) {
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t a = 0; a < state.rho_up.dim; ++a) {
    const double p = state.rho_up(a, a).real();
    const double count = static_cast<double>(std::popcount(a));
    mean += p * count;
    second += p * count * count;
  }
  return second - mean * mean;
}

std::vector<double> product_spectrum(std::span<const double> xis, const ModelParams& params) {
  params.validate();
  std::vector<double> out{1.0};
  for (double xi : xis) {
    const auto w = pair_weights(xi, params.delta, params.debye);
    std::vector<double> next;
    next.reserve(out.size() * 2);
    for (double p : out) {
      next.push_back(p * w.u2);
      next.push_back(p * w.v2);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StateDiagnostics diagnose(const OracleState& state) {
  StateDiagnostics d;
  double norm2 = 0.0;
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    const auto amp = state.amplitudes[i];
    norm2 += std::norm(amp);
    bool paired = true;
    for (std::size_t k = 0; k < state.n_modes; ++k) {
      if (((i >> (2 * k)) & 1U) != ((i >> (2 * k + 1)) & 1U)) paired = false;
    }
    if (!paired) d.unpaired_amplitude = std::max(d.unpaired_amplitude, std::abs(amp));
  }
  d.norm_deviation = std::fabs(norm2 - 1.0);

  const auto& rho = state.rho_up;
  double trace = 0.0;
  for (std::size_t i = 0; i < rho.dim; ++i) {
    trace += rho(i, i).real();
    for (std::size_t j = 0; j < rho.dim; ++j) {
      if (i != j) d.max_offdiagonal = std::max(d.max_offdiagonal, std::abs(rho(i, j)));
      d.hermiticity = std::max(d.hermiticity, std::abs(rho(i, j) - std::conj(rho(j, i))));
    }
  }
  d.trace_deviation = std::fabs(trace - 1.0);
  d.min_eigenvalue = oracle_spectrum(state).front();
  return d;
}

OracleCheckReport run_oracle_checks(const OracleCheckConfig& config) {
  const auto& params = config.params;
  params.validate();
  if (config.min_modes < 1 || config.max_modes > kMaxOracleModes ||
      config.min_modes > config.max_modes) {
    throw CapacityError("oracle checks support 1 to " + std::to_string(kMaxOracleModes) +
                        " pair modes, got range " + std::to_string(config.min_modes) + ".." +
                        std::to_string(config.max_modes));
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> draw(-params.debye, params.debye);
  OracleCheckReport report;
  auto record = [&report](std::string name, std::size_t n, std::size_t trial, double value,
                          double bound) {
    const bool ok = value <= bound;
    if (!ok) ++report.failures;
    report.checks.push_back({std::move(name), n, trial, value, bound, ok});
  };

  for (std::size_t n = config.min_modes; n <= config.max_modes; ++n) {
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      std::vector<double> xis(n);
      for (auto& xi : xis) xi = draw(rng);
      const auto state = build_state(xis, params);
      const auto diag = diagnose(state);
      const double tol = config.tolerance;

      record("normalization", n, trial, diag.norm_deviation, tol);
      record("pair_structure", n, trial, diag.unpaired_amplitude, 0.0);
      record("unit_trace", n, trial, diag.trace_deviation, tol);
      record("hermitian", n, trial, diag.hermiticity, tol);
      record("positive_semidefinite", n, trial, std::max(0.0, -diag.min_eigenvalue), tol);
      record("diagonality", n, trial, diag.max_offdiagonal, config.offdiagonal_bound);
      record("entropy_matches_sum", n, trial,
             std::fabs(oracle_entropy(state) - entropy_discrete(xis, params)), tol);
      record("variance_matches_sum", n, trial,
             std::fabs(oracle_variance(state) - variance_discrete(xis, params)), tol);

      const auto numeric = oracle_spectrum(state);
      const auto analytic = product_spectrum(xis, params);
      double worst = 0.0;
      for (std::size_t i = 0; i < numeric.size(); ++i) {
        worst = std::max(worst, std::fabs(numeric[i] - analytic[i]));
      }
      record("spectrum_matches_products", n, trial, worst, tol);

      double per_mode = 0.0;
      for (double xi : xis) {
        const double single = xi;
        per_mode += oracle_entropy(build_state(std::span<const double>(&single, 1), params));
      }
      record("entropy_additivity", n, trial, std::fabs(oracle_entropy(state) - per_mode), tol);
    }
  }
  return report;
}

}  // namespace bcsee
