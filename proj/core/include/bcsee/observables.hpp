#pragma once

// Integrated ground-state observables of the spin-partitioned BCS state.
//
// The spin-up entropy and the spin-up number variance are sums of independent
// per-orbital terms, S(xi) and |u|^2|v|^2. In the thermodynamic limit they
// become integrals over the Debye shell weighted by the density of states.
// Both approach pi g(0) Delta (S) and pi g(0) Delta / 4 (variance) when
// Delta << debye << mu; the finite-shell integrals are always what is computed
// here so the approach to those limits can be measured.

#include <cstddef>
#include <span>
#include <vector>

#include "bcsee/amplitudes.hpp"
#include "bcsee/dos.hpp"
#include "bcsee/gap_profile.hpp"
#include "bcsee/quadrature.hpp"

namespace bcsee {

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
};

struct VarianceResult {
  double variance_up = 0.0;     ///< sigma_up^2
  double variance_total = 0.0;  ///< sigma_updown^2 = 4 sigma_up^2
  double error = 0.0;           ///< quadrature estimate for variance_up
};

struct ObservablesReport {
  double entropy_total = 0.0;
  double entropy_area_law = 0.0;
  double variance_up = 0.0;
  double variance_total = 0.0;
  double mep = 0.0;
  double quadrature_error_estimate = 0.0;
};

struct WeightedPoint {
  double xi = 0.0;
  double weighted_entropy = 0.0;  ///< S(xi) g(xi)
};

/// Sum of S(xi_i); orbitals outside the shell contribute 0.
double entropy_discrete(std::span<const double> orbitals, const ModelParams& params);

/// Integral of S(xi; Delta(xi)) g(xi) over [-debye, debye]. params.delta is
/// ignored in favour of the profile. Throws ParameterError when the DOS does
/// not cover the shell, NumericalError when quadrature does not converge.
IntegralResult entropy_integral(const DosModel& dos, const ModelParams& params,
                                const GapProfile& gap, const QuadratureOptions& options = {});
/// Constant gap params.delta.
IntegralResult entropy_integral(const DosModel& dos, const ModelParams& params,
                                const QuadratureOptions& options = {});

/// pi g0 delta0.
double entropy_area_law(double g0, double delta0);

/// Sum of |u_i|^2 |v_i|^2.
double variance_discrete(std::span<const double> orbitals, const ModelParams& params);

VarianceResult variance_integral(const DosModel& dos, const ModelParams& params,
                                 const GapProfile& gap, const QuadratureOptions& options = {});
VarianceResult variance_integral(const DosModel& dos, const ModelParams& params,
                                 const QuadratureOptions& options = {});

/// S / sigma_updown^2 for a constant gap; tends to 1 as debye/delta grows.
double entropy_fluctuation_ratio(const DosModel& dos, const ModelParams& params,
                                 const QuadratureOptions& options = {});

/// Inverts S = -2 ln(1 - MEP): MEP = 1 - e^{-S/2}. Throws ParameterError for S < 0.
double mep_from_entropy(double entropy);

/// S(xi) g(xi) on a grid (constant gap).
std::vector<WeightedPoint> weighted_entropy_profile(const DosModel& dos, const ModelParams& params,
                                                    std::span<const double> grid);

/// Entropy, area law, variances and MEP for a constant gap in one call.
ObservablesReport observables_report(const DosModel& dos, const ModelParams& params,
                                     const QuadratureOptions& options = {});

}  // namespace bcsee
