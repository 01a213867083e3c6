#include "bcsee/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcsee/errors.hpp"
#include "bcsee/thermal.hpp"

namespace bcsee {

namespace {

void require_shell_coverage(const DosModel& dos, const ModelParams& params) {
  if (!dos.covers(-params.debye, params.debye)) {
    throw ParameterError("density of states " + dos.name() +
                         " does not cover the Debye shell [-" + std::to_string(params.debye) +
                         ", " + std::to_string(params.debye) + "]");
  }
}

// Shell limits plus the integrand's knees at 0 and +-Delta(0).
std::vector<double> shell_breakpoints(double debye, double delta0) {
  std::vector<double> pts{-debye};
  if (delta0 > 0.0 && delta0 < debye) pts.push_back(-delta0);
  pts.push_back(0.0);
  if (delta0 > 0.0 && delta0 < debye) pts.push_back(delta0);
  pts.push_back(debye);
  return pts;
}

}  // namespace

double entropy_discrete(std::span<const double> orbitals, const ModelParams& params) {
  params.validate();
  double s = 0.0;
  for (double xi : orbitals) s += orbital_entropy(xi, params.delta, params.debye);
  return s;
}

IntegralResult entropy_integral(const DosModel& dos, const ModelParams& params,
                                const GapProfile& gap, const QuadratureOptions& options) {
  params.validate();
  require_shell_coverage(dos, params);
  const double debye = params.debye;
  const auto integrand = [&](double xi) {
    return orbital_entropy(xi, gap.at(xi), debye) * dos.evaluate(xi);
  };
  const auto pts = shell_breakpoints(debye, gap.delta0());
  const auto q = integrate_adaptive(integrand, pts, options);
  return {q.value, q.error, q.evaluations};
}

IntegralResult entropy_integral(const DosModel& dos, const ModelParams& params,
                                const QuadratureOptions& options) {
  params.validate();
  return entropy_integral(dos, params, GapProfile::constant(params.delta), options);
}

double entropy_area_law(double g0, double delta0) {
  if (!(g0 > 0.0) || !(delta0 > 0.0)) throw ParameterError("area law needs g0 > 0 and delta0 > 0");
  return kPi * g0 * delta0;
}

double variance_discrete(std::span<const double> orbitals, const ModelParams& params) {
  params.validate();
  double s = 0.0;
  for (double xi : orbitals) s += pair_variance(xi, params.delta, params.debye);
  return s;
}

VarianceResult variance_integral(const DosModel& dos, const ModelParams& params,
                                 const GapProfile& gap, const QuadratureOptions& options) {
  params.validate();
  require_shell_coverage(dos, params);
  const double debye = params.debye;
  const auto integrand = [&](double xi) {
    return pair_variance(xi, gap.at(xi), debye) * dos.evaluate(xi);
  };
  const auto pts = shell_breakpoints(debye, gap.delta0());
  const auto q = integrate_adaptive(integrand, pts, options);
  return {q.value, 4.0 * q.value, q.error};
}

VarianceResult variance_integral(const DosModel& dos, const ModelParams& params,
                                 const QuadratureOptions& options) {
  params.validate();
  return variance_integral(dos, params, GapProfile::constant(params.delta), options);
}

double entropy_fluctuation_ratio(const DosModel& dos, const ModelParams& params,
                                 const QuadratureOptions& options) {
  const auto s = entropy_integral(dos, params, options);
  const auto v = variance_integral(dos, params, options);
  if (!(v.variance_total > 0.0)) {
    throw ParameterError("entropy/fluctuation ratio is undefined without pairing (delta = 0)");
  }
  return s.value / v.variance_total;
}

double mep_from_entropy(double entropy) {
  if (!(entropy >= 0.0)) throw ParameterError("MEP inversion needs a nonnegative entropy");
  return -std::expm1(-0.5 * entropy);
}

std::vector<WeightedPoint> weighted_entropy_profile(const DosModel& dos, const ModelParams& params,
                                                    std::span<const double> grid) {
  params.validate();
  std::vector<WeightedPoint> out;
  out.reserve(grid.size());
  for (double xi : grid) {
    out.push_back({xi, orbital_entropy(xi, params.delta, params.debye) * dos.evaluate(xi)});
  }
  return out;
}

ObservablesReport observables_report(const DosModel& dos, const ModelParams& params,
                                     const QuadratureOptions& options) {
  const auto s = entropy_integral(dos, params, options);
  const auto v = variance_integral(dos, params, options);
  ObservablesReport r;
  r.entropy_total = s.value;
  r.entropy_area_law = params.delta > 0.0
                           ? entropy_area_law(dos.at_fermi_surface(), params.delta)
                           : 0.0;
  r.variance_up = v.variance_up;
  r.variance_total = v.variance_total;
  r.mep = mep_from_entropy(std::max(0.0, s.value));
  r.quadrature_error_estimate = s.error;
  return r;
}

}  // namespace bcsee
