#include "bcsee/dos.hpp"

#include <algorithm>
#include <cmath>

#include "bcsee/errors.hpp"

namespace bcsee {

DosModel DosModel::constant(double g0) {
  if (!std::isfinite(g0) || g0 <= 0.0) throw ParameterError("constant DOS needs g0 > 0");
  DosModel d;
  d.kind_ = DosKind::constant;
  d.g0_ = g0;
  return d;
}

DosModel DosModel::power_law_3d(double mu, double scale) {
  if (!std::isfinite(mu) || mu <= 0.0) throw ParameterError("power-law DOS needs mu > 0");
  if (!std::isfinite(scale) || scale <= 0.0) throw ParameterError("DOS scale must be > 0");
  DosModel d;
  d.kind_ = DosKind::power_law_3d;
  d.mu_ = mu;
  d.scale_ = scale;
  return d;
}

DosModel DosModel::tabulated(std::vector<double> xi, std::vector<double> g) {
  if (xi.size() != g.size()) throw InputError("DOS table columns differ in length");
  if (xi.size() < 2) throw InputError("DOS table needs at least two knots");
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (!std::isfinite(xi[i]) || !std::isfinite(g[i])) throw InputError("DOS table has non-finite entries");
    if (g[i] < 0.0) throw InputError("DOS table has negative density");
    if (i > 0 && !(xi[i] > xi[i - 1])) throw InputError("DOS table xi must be strictly increasing");
  }
  DosModel d;
  d.kind_ = DosKind::tabulated;
  d.xi_ = std::move(xi);
  d.g_ = std::move(g);
  return d;
}

std::string DosModel::name() const {
  switch (kind_) {
    case DosKind::constant: return "constant";
    case DosKind::power_law_3d: return "power-law-3d";
    case DosKind::tabulated: return "table";
  }
  return "unknown";
}

bool DosModel::covers(double lo, double hi) const noexcept {
  switch (kind_) {
    case DosKind::constant: return true;
    case DosKind::power_law_3d: return lo + mu_ >= 0.0;
    case DosKind::tabulated: return lo >= xi_.front() && hi <= xi_.back();
  }
  return false;
}

double DosModel::evaluate(double xi) const {
  switch (kind_) {
    case DosKind::constant:
      return g0_;
    case DosKind::power_law_3d: {
      const double e = xi + mu_;
      if (e < 0.0) throw ParameterError("power-law DOS queried below the band bottom");
      return scale_ * std::sqrt(e);
    }
    case DosKind::tabulated: {
      if (!(xi >= xi_.front() && xi <= xi_.back())) {
        throw ParameterError("tabulated DOS queried outside its knot range");
      }
      const auto it = std::upper_bound(xi_.begin(), xi_.end(), xi);
      if (it == xi_.end()) return g_.back();
      const auto hi = static_cast<std::size_t>(it - xi_.begin());
      const auto lo = hi - 1;
      if (xi == xi_[lo]) return g_[lo];
      const double t = (xi - xi_[lo]) / (xi_[hi] - xi_[lo]);
      return g_[lo] + t * (g_[hi] - g_[lo]);
    }
  }
  return 0.0;
}

}  // namespace bcsee
