#pragma once

// Coherence factors of the BCS ground state and the per-orbital weights of
// the spin-up entanglement spectrum.
//
// Every energy is a dimensionless multiple of one user-chosen unit. Orbitals
// are labelled by xi = epsilon_k - mu. Inside the Debye shell |xi| <= debye
//
//   |v(xi)|^2 = (1 - xi / sqrt(xi^2 + delta^2)) / 2,   |u|^2 = 1 - |v|^2,
//
// the closed interval included. Strictly outside the shell the pair orbital is
// either filled (xi < -debye) or empty (xi > +debye).

#include <span>
#include <vector>

namespace bcsee {

/// Model inputs defining the Debye shell.
struct ModelParams {
  double delta = 1.0;   ///< pairing energy, >= 0 (0 is the normal metal)
  double debye = 10.0;  ///< Debye energy, > 0
  double mu = 100.0;    ///< Fermi energy, > 0

  /// Throws ParameterError unless delta >= 0, debye > 0, mu > 0 (all finite).
  void validate() const;

  /// delta <= debye / 10 and debye <= mu / 10: the window where g(xi) ~ g(0)
  /// across the shell and the closed-form area law applies.
  bool in_area_law_regime() const noexcept;
};

/// Occupation probabilities of one pair orbital. v2 is computed as 1 - u2 or
/// vice versa so that u2 + v2 == 1 up to one rounding.
struct PairWeights {
  double u2 = 1.0;
  double v2 = 0.0;
};

/// One entry of the entanglement spectrum. beta_eff is +infinity wherever the
/// orbital is pure (outside the shell, or delta == 0).
struct SpectrumPoint {
  double xi = 0.0;
  double u2 = 1.0;
  double v2 = 0.0;
  double entropy = 0.0;
  double beta_eff = 0.0;
};

/// Pair weights for a gap value given locally (used by gap profiles). Does not
/// validate; delta >= 0 and debye > 0 are assumed.
PairWeights pair_weights(double xi, double delta, double debye) noexcept;

/// |v(xi)|^2. Throws ParameterError on invalid params.
double occupation_probability(double xi, const ModelParams& params);

/// |u|^2 |v|^2 = delta^2 / (4 (xi^2 + delta^2)) inside the shell, 0 outside.
double pair_variance(double xi, double delta, double debye) noexcept;

/// -p ln p - (1-p) ln(1-p) with 0 ln 0 = 0. Accurate when either weight is tiny.
double binary_entropy(double p) noexcept;

/// S(xi) = -u2 ln u2 - v2 ln v2 for a locally given gap.
double orbital_entropy(double xi, double delta, double debye) noexcept;

SpectrumPoint spectrum_point(double xi, const ModelParams& params);

/// Throws InputError if the grid is empty or not strictly increasing.
std::vector<SpectrumPoint> spectrum_grid(std::span<const double> grid, const ModelParams& params);

}  // namespace bcsee
