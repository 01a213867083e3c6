#include <cmath>
#include <vector>

#include "bcsee/errors.hpp"
#include "bcsee/io.hpp"
#include "bcsee/thermal.hpp"
#include "doctest.h"
#include "reference.hpp"

TEST_SUITE("thermal") {
  TEST_CASE("beta_eff at xi = delta is 2 acoth(sqrt 2)") {
    CHECK(bcsee::beta_eff(1.0, 1.0) == doctest::Approx(ref::kBetaEff0).epsilon(1e-15));
    CHECK(bcsee::beta_eff(1.0, 1.0) == doctest::Approx(1.762747).epsilon(1e-6));
    CHECK(bcsee::beta_eff(-1.0, 1.0) == bcsee::beta_eff(1.0, 1.0));
  }

  TEST_CASE("beta_eff near the Fermi surface tends to 2 / delta") {
    CHECK(bcsee::beta_eff(0.0, 1.0) == 2.0);
    CHECK(bcsee::beta_eff(1e-8, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(bcsee::beta_eff(0.0, 4.0) == 0.5);
    // Taylor branch and asinh branch meet smoothly.
    const double below = bcsee::beta_eff(0.99e-7, 1.0);
    const double above = bcsee::beta_eff(1.01e-7, 1.0);
    CHECK(std::fabs(below - above) < 1e-15);
  }

  TEST_CASE("beta_eff agrees with the acoth formula where that is well conditioned") {
    for (double xi : {0.05, 0.3, 1.0, 2.7, 10.0, -4.0}) {
      for (double delta : {0.2, 1.0, 3.0}) {
        CHECK(bcsee::beta_eff(xi, delta) == doctest::Approx(ref::beta_eff(xi, delta)).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("beta_eff rejects a closed gap") {
    CHECK_THROWS_AS(bcsee::beta_eff(1.0, 0.0), bcsee::ParameterError);
    CHECK_THROWS_AS(bcsee::beta_eff(1.0, -1.0), bcsee::ParameterError);
    CHECK_THROWS_AS(bcsee::canonical_temperatures(0.0), bcsee::ParameterError);
  }

  TEST_CASE("fermi occupation") {
    CHECK(bcsee::fermi_occupation(0.0, 3.0) == 0.5);
    CHECK(bcsee::fermi_occupation(1.0, bcsee::beta_eff(1.0, 1.0)) ==
          doctest::Approx(ref::kV2AtDelta).epsilon(1e-14));
    CHECK(bcsee::fermi_occupation(800.0, 1.0) == 0.0);
    CHECK(bcsee::fermi_occupation(-800.0, 1.0) == 1.0);
    CHECK(bcsee::fermi_occupation(1e300, 1e10) == 0.0);
    CHECK(bcsee::fermi_occupation(-2.0, 1.0) == doctest::Approx(1.0 / (1.0 + std::exp(-2.0))));
  }

  TEST_CASE("canonical temperatures") {
    const auto t1 = bcsee::canonical_temperatures(1.0);
    CHECK(t1.beta_eff_0 == doctest::Approx(ref::kBetaEff0).epsilon(1e-15));
    CHECK(t1.beta_c == doctest::Approx(ref::kBetaC).epsilon(1e-15));
    CHECK(t1.relative_gap == doctest::Approx(ref::kRelativeGap).epsilon(1e-10));
    CHECK(std::fabs(t1.beta_eff_0 - 1.7627) <= 1e-4);
    CHECK(std::fabs(t1.beta_c - 1.7639) <= 1e-4);
    CHECK(t1.relative_gap < 1e-3);

    const auto t2 = bcsee::canonical_temperatures(2.0);
    CHECK(t2.beta_eff_0 == doctest::Approx(0.88137).epsilon(1e-5));
    CHECK(bcsee::canonical_beta_delta() == doctest::Approx(2.0 * ref::acoth(std::sqrt(2.0))).epsilon(1e-14));
  }

  TEST_CASE("property: constant-ratio law") {
    for (double delta : {0.1, 1.0, 7.3}) {
      const auto t = bcsee::canonical_temperatures(delta);
      CHECK(t.beta_eff_0 * delta == doctest::Approx(ref::kBetaEff0).epsilon(1e-15));
      CHECK(t.beta_c * delta == doctest::Approx(ref::kBetaC).epsilon(1e-15));
    }
  }

  TEST_CASE("property: GGE defining identity inside the shell") {
    const bcsee::ModelParams p{1.0, 1e3, 1e5};
    bcsee::GridSpec g{-1e3, 1e3, 20001, bcsee::GridSpacing::log_symmetric, 1e-6};
    double worst = 0.0;
    for (double xi : bcsee::make_grid(g)) {
      if (xi == 0.0) continue;
      const double fit = bcsee::fermi_occupation(xi, bcsee::beta_eff(xi, p.delta));
      worst = std::max(worst, std::fabs(fit - bcsee::occupation_probability(xi, p)));
    }
    CHECK(worst < 1e-12);
  }

  TEST_CASE("property: beta_eff is even, positive and decreasing in |xi|") {
    double prev = 2.0 + 1e-15;
    for (int i = 0; i <= 600; ++i) {
      const double t = std::pow(10.0, -3.0 + 6.0 * i / 600.0);
      const double b = bcsee::beta_eff(t, 1.0);
      CHECK(b > 0.0);
      CHECK(b == bcsee::beta_eff(-t, 1.0));
      CHECK(b < prev);
      prev = b;
    }
  }

  TEST_CASE("canonical residual") {
    const bcsee::ModelParams p{1.0, 100.0, 1e4};
    const std::vector<double> grid{-1.0, 0.0, 1.0, 5.0};
    const auto r = bcsee::canonical_residual(p, grid);
    CHECK(std::fabs(r[0].residual) < 1e-14);
    CHECK(r[1].residual == 0.0);
    CHECK(std::fabs(r[2].residual) < 1e-14);
    CHECK(r[3].residual == doctest::Approx(ref::kResidualAt5).epsilon(1e-12));
    CHECK(std::fabs(r[3].residual) < 0.02);

    // Independent dense scan over [-10, 10] against the frozen maximum.
    std::vector<double> dense;
    for (int i = 0; i <= 200000; ++i) dense.push_back(-10.0 + 20.0 * i / 200000.0);
    double worst = 0.0;
    for (const auto& pt : bcsee::canonical_residual(p, dense)) worst = std::max(worst, std::fabs(pt.residual));
    CHECK(worst == doctest::Approx(ref::kMaxResidual).epsilon(1e-7));
    const double peak = bcsee::canonical_residual(p, std::vector<double>{ref::kMaxResidualAt})[0].residual;
    CHECK(std::fabs(peak) == doctest::Approx(ref::kMaxResidual).epsilon(1e-12));

    CHECK_THROWS_AS(bcsee::canonical_residual({0.0, 10.0, 100.0}, grid), bcsee::ParameterError);
  }
}
