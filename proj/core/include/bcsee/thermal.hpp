#pragma once

// Effective thermal descriptions of the spin-up reduced state.
//
// Each orbital's occupancy |v(xi)|^2 equals a Fermi function 1/(1 + e^{beta xi})
// at an orbital-dependent reciprocal temperature beta_eff(xi) (a generalized
// Gibbs ensemble). Freezing beta so the match is exact at xi = +-delta gives the
// canonical value beta_eff_0 = 2 acoth(sqrt 2) / delta, which sits within 0.07%
// of the BCS critical value beta_c = pi e^{-gamma} / delta.

#include <span>
#include <vector>

#include "bcsee/amplitudes.hpp"

namespace bcsee {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

/// 2 acoth(sqrt 2) = ln((sqrt 2 + 1)/(sqrt 2 - 1)).
double canonical_beta_delta();
/// pi e^{-gamma}.
double critical_beta_delta();

struct EffectiveTemperatures {
  double beta_eff_0 = 0.0;
  double beta_c = 0.0;
  double relative_gap = 0.0;  ///< |beta_eff_0 - beta_c| / beta_c
};

/// Orbital reciprocal temperature (2/xi) acoth(sqrt(xi^2 + delta^2)/xi), even in
/// xi, equal to 2/delta at xi = 0. Throws ParameterError for delta <= 0.
double beta_eff(double xi, double delta);

/// 1 / (1 + e^{beta xi}) without overflow; saturates to exactly 0 or 1.
double fermi_occupation(double xi, double beta) noexcept;

EffectiveTemperatures canonical_temperatures(double delta);

struct ResidualPoint {
  double xi = 0.0;
  double residual = 0.0;  ///< |v(xi)|^2 - fermi_occupation(xi, beta_eff_0)
};

/// Requires params.delta > 0.
std::vector<ResidualPoint> canonical_residual(const ModelParams& params,
                                              std::span<const double> grid);

}  // namespace bcsee
