#pragma once

#include <functional>
#include <span>
#include <vector>

namespace bcsee {

enum class GapKind { constant, function_of_xi };

/// Pairing energy as a function of orbital energy, Delta(xi), on the Debye
/// shell. Either constant, an analytic callable, or linearly interpolated knots.
class GapProfile {
 public:
  static GapProfile constant(double delta0);
  static GapProfile function(std::function<double(double)> delta_of_xi);
  /// Strictly increasing knots; queries outside the knot range are errors.
  static GapProfile tabulated(std::vector<double> xi, std::vector<double> delta);

  GapKind kind() const noexcept { return kind_; }

  /// Delta(xi). Throws ParameterError for negative or non-finite values.
  double at(double xi) const;
  double delta0() const { return at(0.0); }

  /// max_{|xi| <= 3 Delta(0)} |Delta(xi) - Delta(0)| / Delta(0) <= 0.1, sampled
  /// on 601 uniform points plus any table knots in the window.
  bool slowly_varying() const;
  double max_relative_variation() const;

 private:
  GapProfile() = default;

  GapKind kind_ = GapKind::constant;
  double delta0_ = 1.0;
  std::function<double(double)> fn_;
  std::vector<double> knots_;
};

}  // namespace bcsee
