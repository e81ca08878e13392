// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <doctest.h>

#include "error.hpp"
#include "kernels.hpp"
#include "rng.hpp"
#include "toeplitz.hpp"
#include "verify.hpp"

using ifbm::HurstParams;
using ifbm::toeplitz::dense_cholesky;
using ifbm::toeplitz::IncrementModel;
using ifbm::toeplitz::toeplitz_apply;

TEST_SUITE("toeplitz") {

TEST_CASE("identity autocovariance gives the identity factorization") {
  const std::vector<double> acov = {1.0, 0.0, 0.0, 0.0, 0.0};
  const auto model = IncrementModel::factorize(acov, 5);
  for (std::size_t j = 0; j < 4; ++j) CHECK(model.reflection(j) == 0.0);
  for (std::size_t j = 0; j < 5; ++j) CHECK(model.innovation_variance(j) == 1.0);
  const std::vector<double> noise = {0.3, -1.2, 0.7, 2.5, -0.1};
  std::vector<double> out(5);
  model.sample(noise, out);
  for (std::size_t i = 0; i < 5; ++i) CHECK(out[i] == noise[i]);
}

TEST_CASE("order-2 recursion in closed form") {
  const double rho = 0.37;
  const std::vector<double> acov = {1.0, rho};
  const auto model = IncrementModel::factorize(acov, 2);
  CHECK(model.reflection(0) == doctest::Approx(rho).epsilon(1e-15));
  CHECK(model.innovation_variance(1) == doctest::Approx(1.0 - rho * rho).epsilon(1e-15));

  const std::vector<double> rhs = {1.0, 0.0};
  const auto x = model.solve(rhs);
  CHECK(x[0] == doctest::Approx(1.0 / (1.0 - rho * rho)).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(-rho / (1.0 - rho * rho)).epsilon(1e-14));
}

TEST_CASE("increment model solve of the T=3 system at H=1/2") {
  const HurstParams p(0.5);
  const auto acov = ifbm::kernels::mu_sequence(p, 2);
  const auto model = IncrementModel::factorize(acov, 2);
  const std::vector<double> rhs = {1.0 / 6.0, 0.0};
  const auto z = model.solve(rhs);
  CHECK(z[0] == doctest::Approx(4.0 / 15.0).epsilon(1e-13));
  CHECK(z[1] == doctest::Approx(-1.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("sampling map reproduces the Toeplitz covariance") {
  for (double h : {0.2, 0.5, 0.8}) {
    CHECK(ifbm::verify::toeplitz_factor_error(HurstParams(h), 64) < 1e-10);
  }
}

TEST_CASE("sampling map agrees with the dense oracle") {
  const HurstParams p(0.5);
  const std::size_t n = 64;
  const auto acov = ifbm::kernels::mu_sequence(p, n);
  const auto model = IncrementModel::factorize(acov, n);
  const auto L = dense_cholesky(acov, n);

  // Both factors must reproduce the same matrix: compare L L^T entries.
  std::vector<std::vector<double>> cols(n, std::vector<double>(n));
  std::vector<double> unit(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = 1.0;
    model.sample(unit, cols[i]);
    unit[i] = 0.0;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      double mm = 0.0, dd = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        mm += cols[i][a] * cols[i][b];
        dd += L[a * n + i] * L[b * n + i];
      }
      CHECK(std::abs(mm - dd) < 1e-10);
    }
  }
}

TEST_CASE("dense oracle basics") {
  const std::vector<double> unit = {1.0};
  const auto L1 = dense_cholesky(unit, 1);
  CHECK(L1[0] == 1.0);
  const std::vector<double> acov = {0.81};
  CHECK(dense_cholesky(acov, 1)[0] == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("positive definiteness guard fires") {
  const std::vector<double> singular = {1.0, 1.0};
  CHECK_THROWS_AS((void)IncrementModel::factorize(singular, 2), ifbm::Error);
  try {
    (void)IncrementModel::factorize(singular, 2);
  } catch (const ifbm::Error& e) {
    CHECK(e.code() == ifbm::errc::not_positive_definite);
  }
  const std::vector<double> bad0 = {-1.0, 0.0};
  CHECK_THROWS_AS((void)IncrementModel::factorize(bad0, 2), ifbm::Error);
}

TEST_CASE("dimension mismatches are rejected") {
  const std::vector<double> acov = {1.0, 0.1, 0.1};
  const auto model = IncrementModel::factorize(acov, 3);
  const std::vector<double> short_rhs = {1.0};
  CHECK_THROWS_AS((void)model.solve(short_rhs), ifbm::Error);
  std::vector<double> out(2);
  const std::vector<double> noise = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(model.sample(noise, out), ifbm::Error);
}

TEST_CASE("solve round trip on ill-conditioned increment models") {
  for (double h : {0.1, 0.5, 0.9}) {
    const HurstParams p(h);
    CHECK(ifbm::verify::toeplitz_solve_residual(p, 257, 99) < 1e-9);
  }
}

TEST_CASE("factorization and sampling are deterministic and linear") {
  const HurstParams p(0.3);
  const auto acov = ifbm::kernels::mu_sequence(p, 32);
  const auto m1 = IncrementModel::factorize(acov, 32);
  const auto m2 = IncrementModel::factorize(acov, 32);
  for (std::size_t j = 0; j < 32; ++j)
    CHECK(m1.innovation_variance(j) == m2.innovation_variance(j));

  ifbm::PathRng rng(7, 0);
  std::vector<double> u(32), v(32), w(32);
  for (std::size_t i = 0; i < 32; ++i) {
    u[i] = rng.normal();
    v[i] = rng.normal();
  }
  const double alpha = 1.7, beta = -0.4;
  for (std::size_t i = 0; i < 32; ++i) w[i] = alpha * u[i] + beta * v[i];
  std::vector<double> su(32), sv(32), sw(32);
  m1.sample(u, su);
  m1.sample(v, sv);
  m1.sample(w, sw);
  for (std::size_t i = 0; i < 32; ++i)
    CHECK(sw[i] == doctest::Approx(alpha * su[i] + beta * sv[i]).epsilon(1e-12));

  std::vector<double> su2(32);
  m2.sample(u, su2);
  for (std::size_t i = 0; i < 32; ++i) CHECK(su[i] == su2[i]);
}

TEST_CASE("empirical covariance of sampled increments matches mu") {
  const HurstParams p(0.3);
  const std::size_t order = 15;
  const auto acov = ifbm::kernels::mu_sequence(p, order);
  const auto model = IncrementModel::factorize(acov, order);

  const std::size_t n = 1000000;
  std::vector<double> acc(order * (order + 1) / 2, 0.0);
  std::vector<double> noise(order), eta(order);
  ifbm::PathRng rng(2024, 0);
  for (std::size_t s = 0; s < n; ++s) {
    for (double& x : noise) x = rng.normal();
    model.sample(noise, eta);
    std::size_t idx = 0;
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = a; b < order; ++b) acc[idx++] += eta[a] * eta[b];
  }
  std::size_t idx = 0;
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = a; b < order; ++b) {
      const double emp = acc[idx++] / static_cast<double>(n);
      const double expect = acov[b - a];
      const double se = std::sqrt((acov[0] * acov[0] + expect * expect) / n);
      CHECK(std::abs(emp - expect) < 4.0 * se);
    }
  }
}

TEST_CASE("toeplitz_apply matches a dense multiply") {
  const std::vector<double> acov = {2.0, 0.5, 0.25, 0.1};
  const std::vector<double> x = {1.0, -2.0, 3.0, 0.5};
  const auto y = toeplitz_apply(acov, x);
  CHECK(y[0] == doctest::Approx(2.0 - 1.0 + 0.75 + 0.05).epsilon(1e-15));
  CHECK(y[3] == doctest::Approx(0.1 - 0.5 + 1.5 + 1.0).epsilon(1e-15));
}

}  // TEST_SUITE
