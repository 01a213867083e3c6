#include "bcsee/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "bcsee/errors.hpp"

namespace bcsee {

namespace {

// QUADPACK qk21 abscissae (positive half, descending) and weights.
constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kKronrod = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452170, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss 10-point weights, attached to the odd Kronrod nodes.
constexpr std::array<double, 5> kGauss = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrod[10];
  double gauss = 0.0;
  double absolute = std::fabs(fc) * kKronrod[10];
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kNodes[j];
    const double lo = f(center - dx);
    const double hi = f(center + dx);
    kronrod += kKronrod[j] * (lo + hi);
    absolute += kKronrod[j] * (std::fabs(lo) + std::fabs(hi));
    if (j % 2 == 1) gauss += kGauss[j / 2] * (lo + hi);
  }
  kronrod *= half;
  gauss *= half;
  absolute *= std::fabs(half);
  // Rounding floor, as in QUADPACK.
  const double error =
      std::max(std::fabs(kronrod - gauss), 50.0 * std::numeric_limits<double>::epsilon() * absolute);
  if (!std::isfinite(kronrod)) {
    throw NumericalError("integrand is not finite on [" + std::to_string(a) + ", " +
                             std::to_string(b) + "]",
                         kronrod, error);
  }
  return {a, b, kronrod, error};
}

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

double ordered_sum(std::vector<Panel>& panels, double Panel::*field) {
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double s = 0.0;
  for (const auto& p : panels) s += p.*field;
  return s;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints,
                                    const QuadratureOptions& options) {
  if (breakpoints.size() < 2) throw InputError("quadrature needs at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) {
      throw InputError("quadrature breakpoints must be strictly increasing");
    }
  }
  if (!(options.abs_tolerance > 0.0)) throw InputError("quadrature tolerance must be > 0");

  constexpr std::size_t kPerPanel = 21;
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  std::size_t evaluations = 0;
  double total_error = 0.0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const Panel p = evaluate_panel(f, breakpoints[i - 1], breakpoints[i]);
    evaluations += kPerPanel;
    total_error += p.error;
    queue.push(p);
  }

  auto drain = [&queue]() {
    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
      panels.push_back(queue.top());
      queue.pop();
    }
    return panels;
  };

  while (total_error > options.abs_tolerance) {
    if (evaluations + 2 * kPerPanel > options.max_evaluations) {
      auto panels = drain();
      const double err = ordered_sum(panels, &Panel::error);
      throw NumericalError("quadrature budget of " + std::to_string(options.max_evaluations) +
                               " evaluations exhausted",
                           ordered_sum(panels, &Panel::value), err);
    }
    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      auto panels = drain();
      const double err = ordered_sum(panels, &Panel::error);
      throw NumericalError("quadrature panel cannot be subdivided further",
                           ordered_sum(panels, &Panel::value), err);
    }
    queue.pop();
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    evaluations += 2 * kPerPanel;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  auto panels = drain();
  QuadratureResult r;
  r.panels = panels.size();
  r.error = ordered_sum(panels, &Panel::error);
  r.value = ordered_sum(panels, &Panel::value);
  r.evaluations = evaluations;
  return r;
}

}  // namespace bcsee
