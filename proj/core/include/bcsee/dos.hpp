#pragma once

#include <span>
#include <string>
#include <vector>

namespace bcsee {

enum class DosKind { constant, power_law_3d, tabulated };

/// Density of single-particle orbitals g(xi) per unit energy.
///
///   constant      g(xi) = g0
///   power_law_3d  g(xi) = scale * (xi + mu)^{1/2}   (free 3D electrons)
///   tabulated     linear interpolation between (xi, g) knots
///
/// Immutable after construction.
class DosModel {
 public:
  static DosModel constant(double g0);
  static DosModel power_law_3d(double mu, double scale = 1.0);
  /// Knots must be strictly increasing in xi, at least two, with g >= 0.
  static DosModel tabulated(std::vector<double> xi, std::vector<double> g);

  DosKind kind() const noexcept { return kind_; }
  std::string name() const;

  /// Throws ParameterError outside the model's domain (xi < -mu for the power
  /// law, outside the knot range for a table).
  double evaluate(double xi) const;
  double operator()(double xi) const { return evaluate(xi); }

  /// g at the Fermi surface.
  double at_fermi_surface() const { return evaluate(0.0); }

  /// Whether [lo, hi] lies inside the domain.
  bool covers(double lo, double hi) const noexcept;

  double g0() const noexcept { return g0_; }
  double mu() const noexcept { return mu_; }
  double scale() const noexcept { return scale_; }
  std::span<const double> knots_xi() const noexcept { return xi_; }
  std::span<const double> knots_g() const noexcept { return g_; }

 private:
  DosModel() = default;

  DosKind kind_ = DosKind::constant;
  double g0_ = 1.0;
  double mu_ = 0.0;
  double scale_ = 1.0;
  std::vector<double> xi_;
  std::vector<double> g_;
};

}  // namespace bcsee
