// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include "toeplitz.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "error.hpp"

namespace ifbm::toeplitz {

IncrementModel IncrementModel::factorize(std::span<const double> autocov, std::size_t order) {
  require(order >= 1, errc::invalid_argument, "factorization order must be positive");
  require(autocov.size() >= order, errc::dimension_mismatch,
          "autocovariance shorter than requested order");
  require(autocov[0] > 0.0, errc::not_positive_definite, "lag-0 autocovariance must be positive");

  IncrementModel m;
  m.autocov_.assign(autocov.begin(), autocov.begin() + static_cast<std::ptrdiff_t>(order));
  m.vars_.resize(order);
  m.refl_.resize(order - 1);
  m.rows_.resize(order * (order - 1) / 2);
  m.vars_[0] = m.autocov_[0];

  const double* r = m.autocov_.data();
  for (std::size_t p = 0; p + 1 < order; ++p) {
    // Extend the predictor from order p to order p+1.
    const double* prev = p >= 1 ? &m.rows_[p * (p - 1) / 2] : nullptr;
    double e = r[p + 1];
    for (std::size_t i = 0; i < p; ++i) e -= prev[i] * r[i + 1];
    const double rho = e / m.vars_[p];
    require(std::abs(rho) < 1.0 - 1e-12, errc::not_positive_definite,
            "reflection coefficient at order " + std::to_string(p + 1) +
                " reached unit magnitude; the model is numerically singular");
    double* row = &m.rows_[(p + 1) * p / 2];
    row[0] = rho;
    for (std::size_t i = 1; i <= p; ++i) row[i] = prev[i - 1] - rho * prev[p - i];
    m.refl_[p] = rho;
    m.vars_[p + 1] = m.vars_[p] * (1.0 - rho * rho);
  }
  return m;
}

void IncrementModel::sample(std::span<const double> noise, std::span<double> out) const {
  const std::size_t n = order();
  require(noise.size() == n, errc::dimension_mismatch, "noise length must equal model order");
  require(out.size() == n, errc::dimension_mismatch, "output length must equal model order");
  out[0] = std::sqrt(vars_[0]) * noise[0];
  for (std::size_t k = 1; k < n; ++k) {
    const double* row = &rows_[k * (k - 1) / 2];
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) acc += row[i] * out[i];
    out[k] = acc + std::sqrt(vars_[k]) * noise[k];
  }
}

std::vector<double> IncrementModel::levinson_solve(std::span<const double> rhs) const {
  const std::size_t n = order();
  const double* r = autocov_.data();
  std::vector<double> x(n);
  x[0] = rhs[0] / r[0];
  for (std::size_t k = 1; k < n; ++k) {
    double e = 0.0;
    for (std::size_t i = 0; i < k; ++i) e += x[i] * r[k - i];
    const double mu = (rhs[k] - e) / vars_[k];
    const double* row = &rows_[k * (k - 1) / 2];
    for (std::size_t i = 0; i < k; ++i) x[i] -= mu * row[i];
    x[k] = mu;
  }
  return x;
}

std::vector<double> IncrementModel::solve(std::span<const double> rhs) const {
  require(rhs.size() == order(), errc::dimension_mismatch,
          "right-hand side length must equal model order");
  std::vector<double> x = levinson_solve(rhs);
  // One refinement pass knocks the residual down to rounding level.
  std::vector<double> ax = apply(x);
  std::vector<double> res(order());
  for (std::size_t i = 0; i < res.size(); ++i) res[i] = rhs[i] - ax[i];
  std::vector<double> dx = levinson_solve(res);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
  return x;
}

std::vector<double> IncrementModel::apply(std::span<const double> x) const {
  require(x.size() == order(), errc::dimension_mismatch, "vector length must equal model order");
  return toeplitz_apply(autocov_, x);
}

std::vector<double> dense_cholesky(std::span<const double> autocov, std::size_t n) {
  require(n >= 1, errc::invalid_argument, "matrix order must be positive");
  require(autocov.size() >= n, errc::dimension_mismatch,
          "autocovariance shorter than matrix order");
  std::vector<double> L(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = autocov[i - j];
      for (std::size_t k = 0; k < j; ++k) acc -= L[i * n + k] * L[j * n + k];
      if (i == j) {
        require(acc > 0.0, errc::not_positive_definite,
                "dense factorization hit a nonpositive pivot at row " + std::to_string(i));
        L[i * n + i] = std::sqrt(acc);
      } else {
        L[i * n + j] = acc / L[j * n + j];
      }
    }
  }
  return L;
}

std::vector<double> toeplitz_apply(std::span<const double> autocov, std::span<const double> x) {
  const std::size_t n = x.size();
  require(autocov.size() >= n, errc::dimension_mismatch,
          "autocovariance shorter than vector length");
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += autocov[i > j ? i - j : j - i] * x[j];
    y[i] = acc;
  }
  return y;
}

}  // namespace ifbm::toeplitz
