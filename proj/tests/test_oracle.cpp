#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bcsee/errors.hpp"
#include "bcsee/observables.hpp"
#include "bcsee/oracle.hpp"
#include "doctest.h"
#include "reference.hpp"

using bcsee::ModelParams;

namespace {
const ModelParams kParams{1.0, 10.0, 100.0};
}

TEST_SUITE("oracle") {
  TEST_CASE("single mode at the Fermi surface") {
    const auto s = bcsee::build_state(std::vector<double>{0.0}, kParams);
    REQUIRE(s.amplitudes.size() == 4);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(s.amplitudes[0].real() == doctest::Approx(h).epsilon(1e-15));  // |00>
    CHECK(s.amplitudes[3].real() == doctest::Approx(h).epsilon(1e-15));  // |11>
    CHECK(std::abs(s.amplitudes[1]) == 0.0);
    CHECK(std::abs(s.amplitudes[2]) == 0.0);
    CHECK(s.rho_up(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.rho_up(1, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(s.rho_up(0, 1)) == 0.0);
    CHECK(bcsee::oracle_entropy(s) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(bcsee::oracle_variance(s) == doctest::Approx(0.25).epsilon(1e-15));
  }

  TEST_CASE("single mode far above the shell is empty") {
    const auto s = bcsee::build_state(std::vector<double>{100.0}, kParams);
    CHECK(s.amplitudes[0] == std::complex<double>(1.0, 0.0));
    CHECK(s.amplitudes[3] == std::complex<double>(0.0, 0.0));
    CHECK(bcsee::oracle_entropy(s) == 0.0);
  }

  TEST_CASE("single mode at xi = delta reproduces the occupation") {
    const auto s = bcsee::build_state(std::vector<double>{1.0}, kParams);
    CHECK(s.rho_up(0, 0).real() == doctest::Approx(1.0 - ref::kV2AtDelta).epsilon(1e-14));
    CHECK(s.rho_up(1, 1).real() == doctest::Approx(ref::kV2AtDelta).epsilon(1e-14));
    CHECK(bcsee::oracle_entropy(s) == doctest::Approx(ref::kEntropyAtDelta).epsilon(1e-13));
  }

  TEST_CASE("two modes at +-delta") {
    const std::vector<double> xis{1.0, -1.0};
    const auto s = bcsee::build_state(xis, kParams);
    const double v = ref::kV2AtDelta;
    const double u = 1.0 - v;
    std::vector<double> sq;
    for (const auto& a : s.amplitudes) {
      if (std::abs(a) > 0.0) sq.push_back(std::norm(a));
    }
    std::sort(sq.begin(), sq.end());
    std::vector<double> want{u * v, u * u, v * v, v * u};
    std::sort(want.begin(), want.end());
    REQUIRE(sq.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(sq[i] == doctest::Approx(want[i]).epsilon(1e-14));
    CHECK(std::fabs(bcsee::oracle_entropy(s) - bcsee::entropy_discrete(xis, kParams)) < 1e-12);
    CHECK(bcsee::oracle_entropy(s) == doctest::Approx(2.0 * ref::kEntropyAtDelta).epsilon(1e-13));
    CHECK(bcsee::oracle_variance(s) == doctest::Approx(0.25).epsilon(1e-14));
  }

  TEST_CASE("mode count limits") {
    CHECK_THROWS_AS(bcsee::build_state(std::vector<double>{}, kParams), bcsee::CapacityError);
    CHECK_THROWS_AS(bcsee::build_state(std::vector<double>(9, 0.1), kParams), bcsee::CapacityError);
    const auto eight = bcsee::build_state(std::vector<double>{-3, -2, -1, -0.5, 0, 0.5, 1, 2}, kParams);
    CHECK(eight.amplitudes.size() == 65536);
    CHECK(eight.rho_up.dim == 256);
    CHECK(bcsee::diagnose(eight).max_offdiagonal < 1e-14);
  }

  TEST_CASE("property: oracle agrees with analytic sums for N <= 6") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> draw(-12.0, 12.0);  // includes exterior orbitals
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> xis(n);
        for (auto& x : xis) x = draw(rng);
        const auto s = bcsee::build_state(xis, kParams);
        const auto d = bcsee::diagnose(s);
        CHECK(d.norm_deviation < 1e-12);
        CHECK(d.unpaired_amplitude == 0.0);
        CHECK(d.max_offdiagonal < 1e-14);
        CHECK(d.trace_deviation < 1e-12);
        CHECK(d.hermiticity < 1e-12);
        CHECK(d.min_eigenvalue > -1e-12);
        CHECK(std::fabs(bcsee::oracle_entropy(s) - bcsee::entropy_discrete(xis, kParams)) < 1e-12);
        CHECK(std::fabs(bcsee::oracle_variance(s) - bcsee::variance_discrete(xis, kParams)) < 1e-12);
        const auto numeric = bcsee::oracle_spectrum(s);
        const auto analytic = bcsee::product_spectrum(xis, kParams);
        REQUIRE(numeric.size() == analytic.size());
        for (std::size_t i = 0; i < numeric.size(); ++i) CHECK(std::fabs(numeric[i] - analytic[i]) < 1e-12);
      }
    }
  }

  TEST_CASE("property: entanglement does not depend on pair phases") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> xi_draw(-5.0, 5.0);
    std::uniform_real_distribution<double> phase_draw(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> xis(4);
      std::vector<double> phases(4);
      for (auto& x : xis) x = xi_draw(rng);
      for (auto& p : phases) p = phase_draw(rng);
      const auto real = bcsee::build_state(xis, kParams);
      const auto twisted = bcsee::build_state(xis, kParams, phases);
      CHECK(std::fabs(bcsee::oracle_entropy(real) - bcsee::oracle_entropy(twisted)) < 1e-12);
      CHECK(std::fabs(bcsee::oracle_variance(real) - bcsee::oracle_variance(twisted)) < 1e-12);
      CHECK(bcsee::diagnose(twisted).max_offdiagonal < 1e-14);
    }
    CHECK_THROWS_AS(bcsee::build_state(std::vector<double>{0.0, 1.0}, kParams, std::vector<double>{0.0}),
                    bcsee::InputError);
  }

  TEST_CASE("property: entropy is additive over modes") {
    const std::vector<double> xis{-2.0, -0.3, 0.1, 4.0, 9.0};
    double per_mode = 0.0;
    for (double x : xis) per_mode += bcsee::oracle_entropy(bcsee::build_state(std::vector<double>{x}, kParams));
    CHECK(std::fabs(bcsee::oracle_entropy(bcsee::build_state(xis, kParams)) - per_mode) < 1e-12);
  }

  TEST_CASE("check suite passes and can be forced to fail") {
    bcsee::OracleCheckConfig cfg;
    cfg.max_modes = 3;
    cfg.trials = 3;
    const auto ok = bcsee::run_oracle_checks(cfg);
    CHECK(ok.passed());
    CHECK(ok.checks.size() == 3 * 3 * 10);

    cfg.tolerance = -1.0;
    const auto bad = bcsee::run_oracle_checks(cfg);
    CHECK_FALSE(bad.passed());

    cfg.max_modes = 9;
    CHECK_THROWS_AS(bcsee::run_oracle_checks(cfg), bcsee::CapacityError);
  }
}
