#include "bcsee/gap_profile.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "bcsee/errors.hpp"

namespace bcsee {

GapProfile GapProfile::constant(double delta0) {
  if (!std::isfinite(delta0) || delta0 < 0.0) throw ParameterError("gap must be finite and >= 0");
  GapProfile p;
  p.kind_ = GapKind::constant;
  p.delta0_ = delta0;
  return p;
}

GapProfile GapProfile::function(std::function<double(double)> delta_of_xi) {
  if (!delta_of_xi) throw InputError("gap profile callable is empty");
  GapProfile p;
  p.kind_ = GapKind::function_of_xi;
  p.fn_ = std::move(delta_of_xi);
  return p;
}

GapProfile GapProfile::tabulated(std::vector<double> xi, std::vector<double> delta) {
  if (xi.size() != delta.size() || xi.size() < 2) {
    throw InputError("gap table needs at least two (xi, delta) knots");
  }
  for (std::size_t i = 1; i < xi.size(); ++i) {
    if (!(xi[i] > xi[i - 1])) throw InputError("gap table xi must be strictly increasing");
  }
  std::vector<double> knots = xi;
  auto knots_xi = std::make_shared<const std::vector<double>>(std::move(xi));
  auto knots_d = std::make_shared<const std::vector<double>>(std::move(delta));
  auto p = function([knots_xi, knots_d](double x) {
    const auto& xs = *knots_xi;
    const auto& ds = *knots_d;
    if (!(x >= xs.front() && x <= xs.back())) {
      throw ParameterError("gap table queried outside its knot range");
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.end()) return ds.back();
    const auto hi = static_cast<std::size_t>(it - xs.begin());
    const auto lo = hi - 1;
    if (x == xs[lo]) return ds[lo];
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ds[lo] + t * (ds[hi] - ds[lo]);
  });
  p.knots_ = std::move(knots);
  return p;
}

double GapProfile::at(double xi) const {
  const double d = kind_ == GapKind::constant ? delta0_ : fn_(xi);
  if (!std::isfinite(d) || d < 0.0) throw ParameterError("gap profile returned a negative or non-finite value");
  return d;
}

double GapProfile::max_relative_variation() const {
  const double d0 = delta0();
  if (d0 <= 0.0) throw ParameterError("slowly-varying check needs Delta(0) > 0");
  if (kind_ == GapKind::constant) return 0.0;
  constexpr int kSamples = 601;
  const double half_width = 3.0 * d0;
  double worst = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double xi = -half_width + 2.0 * half_width * i / (kSamples - 1);
    worst = std::max(worst, std::fabs(at(xi) - d0) / d0);
  }
  for (double xi : knots_) {
    if (std::fabs(xi) <= half_width) worst = std::max(worst, std::fabs(at(xi) - d0) / d0);
  }
  return worst;
}

bool GapProfile::slowly_varying() const { return max_relative_variation() <= 0.1; }

}  // namespace bcsee
