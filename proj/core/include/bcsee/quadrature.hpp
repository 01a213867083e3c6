#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace bcsee {

struct QuadratureOptions {
  double abs_tolerance = 1e-10;
  std::size_t max_evaluations = 1'000'000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< sum of per-panel |Kronrod - Gauss| estimates
  std::size_t evaluations = 0;
  std::size_t panels = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod quadrature over the sorted
/// breakpoints (first and last are the integration limits). The panel with the
/// largest error estimate is bisected until the summed estimate drops below
/// abs_tolerance. Panels are summed in left-to-right order, so results are
/// reproducible bit for bit.
///
/// Throws NumericalError with the partial value when the evaluation budget is
/// exhausted or a panel can no longer be split, InputError on bad breakpoints.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints,
                                    const QuadratureOptions& options = {});

}  // namespace bcsee
