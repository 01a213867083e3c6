#include "bcsee/thermal.hpp"

#include <cmath>
#include <string>

#include "bcsee/errors.hpp"

namespace bcsee {

namespace {

void require_positive_gap(double delta) {
  if (!std::isfinite(delta) || delta <= 0.0) {
    throw ParameterError("effective temperature needs a positive pairing energy, got " +
                         std::to_string(delta));
  }
}

// Below this |xi|/delta the quadratic Taylor form is used.
constexpr double kSmallRatio = 1e-7;

}  // namespace

double canonical_beta_delta() {
  const double s = std::sqrt(2.0);
  return std::log((s + 1.0) / (s - 1.0));
}

double critical_beta_delta() { return kPi * std::exp(-kEulerGamma); }

double beta_eff(double xi, double delta) {
  require_positive_gap(delta);
  const double t = std::fabs(xi) / delta;
  if (t < kSmallRatio) return (2.0 / delta) * (1.0 - t * t / 6.0);
  // acoth(r/|xi|) = atanh(|xi|/r) = asinh(|xi|/delta); the last form keeps full
  // precision for both small and large |xi|.
  return 2.0 * std::asinh(t) / std::fabs(xi);
}

double fermi_occupation(double xi, double beta) noexcept {
  const double x = beta * xi;
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

EffectiveTemperatures canonical_temperatures(double delta) {
  require_positive_gap(delta);
  EffectiveTemperatures t;
  t.beta_eff_0 = canonical_beta_delta() / delta;
  t.beta_c = critical_beta_delta() / delta;
  t.relative_gap = std::fabs(t.beta_eff_0 - t.beta_c) / t.beta_c;
  return t;
}

std::vector<ResidualPoint> canonical_residual(const ModelParams& params,
                                              std::span<const double> grid) {
  params.validate();
  require_positive_gap(params.delta);
  const double beta0 = canonical_temperatures(params.delta).beta_eff_0;
  std::vector<ResidualPoint> out;
  out.reserve(grid.size());
  for (double xi : grid) {
    const double v2 = pair_weights(xi, params.delta, params.debye).v2;
    out.push_back({xi, v2 - fermi_occupation(xi, beta0)});
  }
  return out;
}

}  // namespace bcsee
