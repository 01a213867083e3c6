#include "bcsee/amplitudes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bcsee/errors.hpp"
#include "bcsee/thermal.hpp"

namespace bcsee {

void ModelParams::validate() const {
  if (!std::isfinite(delta) || delta < 0.0) {
    throw ParameterError("pairing energy must be finite and >= 0, got " + std::to_string(delta));
  }
  if (!std::isfinite(debye) || debye <= 0.0) {
    throw ParameterError("Debye energy must be finite and > 0, got " + std::to_string(debye));
  }
  if (!std::isfinite(mu) || mu <= 0.0) {
    throw ParameterError("Fermi energy must be finite and > 0, got " + std::to_string(mu));
  }
}

bool ModelParams::in_area_law_regime() const noexcept {
  return delta <= debye / 10.0 && debye <= mu / 10.0;
}

PairWeights pair_weights(double xi, double delta, double debye) noexcept {
  if (xi < -debye) return {0.0, 1.0};
  if (xi > debye) return {1.0, 0.0};
  if (delta == 0.0) {
    if (xi < 0.0) return {0.0, 1.0};
    if (xi > 0.0) return {1.0, 0.0};
    return {0.5, 0.5};
  }
  // The smaller weight is delta^2 / (2 r (r + |xi|)), free of cancellation.
  const double r = std::hypot(xi, delta);
  const double small = delta * (delta / (2.0 * r * (r + std::fabs(xi))));
  if (xi >= 0.0) return {1.0 - small, small};
  return {small, 1.0 - small};
}

double occupation_probability(double xi, const ModelParams& params) {
  params.validate();
  return pair_weights(xi, params.delta, params.debye).v2;
}

double pair_variance(double xi, double delta, double debye) noexcept {
  if (xi < -debye || xi > debye || delta == 0.0) return 0.0;
  return delta * delta / (4.0 * (xi * xi + delta * delta));
}

double binary_entropy(double p) noexcept {
  const double m = p <= 0.5 ? p : 1.0 - p;
  if (m <= 0.0) return 0.0;
  return -m * std::log(m) - (1.0 - m) * std::log1p(-m);
}

double orbital_entropy(double xi, double delta, double debye) noexcept {
  const auto w = pair_weights(xi, delta, debye);
  return binary_entropy(std::min(w.u2, w.v2));
}

SpectrumPoint spectrum_point(double xi, const ModelParams& params) {
  params.validate();
  const auto w = pair_weights(xi, params.delta, params.debye);
  SpectrumPoint pt;
  pt.xi = xi;
  pt.u2 = w.u2;
  pt.v2 = w.v2;
  pt.entropy = binary_entropy(std::min(w.u2, w.v2));
  const bool inside = xi >= -params.debye && xi <= params.debye;
  pt.beta_eff = (inside && params.delta > 0.0) ? beta_eff(xi, params.delta)
                                               : std::numeric_limits<double>::infinity();
  return pt;
}

std::vector<SpectrumPoint> spectrum_grid(std::span<const double> grid, const ModelParams& params) {
  if (grid.empty()) throw InputError("spectrum grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw InputError("spectrum grid must be strictly increasing");
  }
  params.validate();
  std::vector<SpectrumPoint> out;
  out.reserve(grid.size());
  for (double xi : grid) out.push_back(spectrum_point(xi, params));
  return out;
}

}  // namespace bcsee
