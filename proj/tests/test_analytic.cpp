// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <doctest.h>

#include "analytic.hpp"
#include "error.hpp"
#include "kernels.hpp"
#include "rng.hpp"

using ifbm::HurstParams;
namespace an = ifbm::analytic;

TEST_SUITE("analytic") {

TEST_CASE("time change pair validation") {
  CHECK_THROWS_AS(an::TimeChangePair(0.4, 0.7), ifbm::Error);
  CHECK_THROWS_AS(an::TimeChangePair(0.7, 0.6), ifbm::Error);
  const an::TimeChangePair pair(0.6, 0.8);
  CHECK(pair.theta == doctest::Approx(3.2 / 3.6).epsilon(1e-15));
}

TEST_CASE("beta_q on the diagonal equals t^q0") {
  const an::TimeChangePair pair(0.6, 0.8);
  for (double t : {0.2, 0.5, 1.0}) {
    CHECK(an::beta_q(pair, t, t) ==
          doctest::Approx(std::pow(t, pair.q0)).epsilon(1e-13));
  }
}

TEST_CASE("beta_q matches the gamma kernel under the time change") {
  for (auto [h0, h] : std::vector<std::pair<double, double>>{
           {0.6, 0.7}, {0.55, 0.9}, {0.51, 0.99}, {0.7, 0.7}}) {
    const an::TimeChangePair pair(h0, h);
    const HurstParams p(h);
    for (int i = 1; i <= 10; ++i) {
      for (int j = 1; j <= i; ++j) {
        const double t = i / 10.0;
        const double s = j / 10.0;
        const double via_gamma =
            p.q * ifbm::kernels::gamma_cov(p, std::pow(t, pair.theta), std::pow(s, pair.theta));
        CHECK(an::beta_q(pair, t, s) == doctest::Approx(via_gamma).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("beta_q vanishes with the ratio") {
  const an::TimeChangePair pair(0.6, 0.8);
  CHECK(std::abs(an::beta_q(pair, 1.0, 1e-9)) < 1e-6);
  CHECK_THROWS_AS((void)an::beta_q(pair, 0.5, 0.7), ifbm::Error);
}

TEST_CASE("covariance comparison gap is nonnegative") {
  CHECK(an::slepian_gap(an::TimeChangePair(0.6, 0.7), 100) >= -1e-12);
  CHECK(an::slepian_gap(an::TimeChangePair(0.55, 0.9), 100) >= -1e-12);
  // Equal parameters give an identically zero gap.
  CHECK(an::slepian_gap(an::TimeChangePair(0.7, 0.7), 40) == 0.0);
}

TEST_CASE("R terms are nonnegative and match their asymptotics") {
  for (auto [h0, h] : std::vector<std::pair<double, double>>{{0.6, 0.8}, {0.6, 0.7}, {0.55, 0.9}}) {
    const an::TimeChangePair pair(h0, h);
    for (int i = 1; i <= 999; i += 7) {
      const double rho = i / 1000.0;
      const auto rt = an::r_terms(pair, rho);
      CHECK(rt.r1 >= -1e-10);
      CHECK(rt.r2 >= -1e-10);
    }
    // Small-ratio branch: R1 ~ y^2 (q0 - 1)/2 with y = rho^theta.
    {
      const double rho = 1e-3;
      const double y = std::pow(rho, pair.theta);
      const auto rt = an::r_terms(pair, rho);
      const double lead = y * y * (pair.q0 - 1.0) / 2.0;
      CHECK(std::abs(rt.r1 / lead - 1.0) < 0.05);
    }
    // Near-one branch: R1 ~ 1 - y.
    {
      const double rho = 1.0 - 1e-3;
      const double ybar = 1.0 - std::pow(rho, pair.theta);
      const auto rt = an::r_terms(pair, rho);
      CHECK(std::abs(rt.r1 / ybar - 1.0) < 0.05);
    }
  }
  CHECK_THROWS_AS((void)an::r_terms(an::TimeChangePair(0.7, 0.7), 0.5), ifbm::Error);
  CHECK_THROWS_AS((void)an::r_terms(an::TimeChangePair(0.6, 0.8), 1.5), ifbm::Error);
}

TEST_CASE("R2 integrand is pointwise nonnegative in the u variable") {
  const an::TimeChangePair pair(0.6, 0.8);
  for (double rho : {0.1, 0.5, 0.9}) {
    const double u_lo = rho;
    const double u_hi = std::pow(rho, pair.theta);
    for (int i = 1; i < 1000; ++i) {
      const double u = u_lo + (u_hi - u_lo) * i / 1000.0;
      const double alpha = std::log(u) / std::log(rho);
      const double val =
          u * (1.0 - std::pow(u, pair.q0 / alpha - 2.0) - std::pow(1.0 - u, pair.q0 - 1.0));
      CHECK(val >= -1e-12);
    }
  }
}

TEST_CASE("uniform argmax histogram has no inequality violations") {
  ifbm::PathRng rng(5150, 0);
  std::vector<double> g(20000);
  for (double& x : g) x = rng.uniform();
  CHECK(an::psi_inequality_worst_z(g, 20) > -5.0);
}

TEST_CASE("steep integrable density stays within noise of the boundary case") {
  // psi(t) = 0.7 t^{-0.3}: t psi(t) increasing and (1-t) psi(t) decreasing,
  // so the inequality holds with little slack. Inverse CDF t = u^{1/0.7}.
  ifbm::PathRng rng(6021, 0);
  std::vector<double> g(50000);
  for (double& x : g) {
    const double u = rng.uniform();
    x = std::pow(u, 1.0 / 0.7);
  }
  CHECK(an::psi_inequality_worst_z(g, 20) > -3.0);
}

TEST_CASE("a density violating the max-ratio inequality is caught") {
  // Uniform on (0, 1/2): psi vanishes on the right half while staying
  // positive on the left, which the inequality forbids.
  ifbm::PathRng rng(6022, 0);
  std::vector<double> g(30000);
  for (double& x : g) x = 0.5 * rng.uniform();
  CHECK(an::psi_inequality_worst_z(g, 20) < -10.0);
}

TEST_CASE("psi harness input validation") {
  std::vector<double> tiny(100, 0.5);
  CHECK_THROWS_AS((void)an::psi_inequality_worst_z(tiny, 20), ifbm::Error);
  std::vector<double> enough(20000, 0.5);
  CHECK_THROWS_AS((void)an::psi_inequality_worst_z(enough, 5), ifbm::Error);
}

TEST_CASE("FBM argmax sampler is exact for Brownian motion") {
  const auto g = an::fbm_argmax_samples(HurstParams(0.5), 256, 20000, 31, 2);
  REQUIRE(g.size() == 20000);
  // The argmax law is symmetric about 1/2 up to grid effects.
  std::size_t below = 0, interior = 0;
  for (double x : g) {
    if (x < 0.5) ++below;
    if (x > 0.0 && x < 1.0) ++interior;
  }
  const double frac = static_cast<double>(below) / static_cast<double>(g.size());
  CHECK(std::abs(frac - 0.5) < 0.02);
  CHECK(interior > 16000);
}

TEST_CASE("maximum CDF increases with H on the supercritical range") {
  const std::vector<double> h_grid = {0.6, 0.7, 0.8};
  const std::vector<double> x_grid = {0.3, 0.5, 1.0, 2.0};
  const auto res = an::fm_monotonicity_mc(h_grid, x_grid, 4000, 256, 808, 2);
  CHECK(res.worst_z > -3.0);
  // Large thresholds saturate the CDF.
  for (std::size_t hi = 0; hi < h_grid.size(); ++hi)
    CHECK(res.cdf[hi * x_grid.size() + 3] > 0.9);
  CHECK_THROWS_AS((void)an::fm_monotonicity_mc(std::vector<double>{0.4}, x_grid, 100, 16, 1, 1),
                  ifbm::Error);
}

}  // TEST_SUITE
