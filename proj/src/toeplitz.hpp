// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Levinson-Durbin machinery for symmetric positive definite Toeplitz systems:
// factorization, linear solves, and innovations-based sampling of a
// stationary Gaussian sequence with prescribed autocovariance.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ifbm::toeplitz {

// Levinson-Durbin factorization of the SPD Toeplitz matrix A_ij = r_{|i-j|}.
// Stores every forward-predictor row, so setup is O(n^2) time and O(n^2)
// memory; each solve or sample afterwards is O(n^2) with small constants.
// Immutable after construction and safe to share across threads.
class IncrementModel {
 public:
  // autocov must hold at least `order` lags r_0 .. r_{order-1}. Throws
  // Error(not_positive_definite) when a reflection coefficient reaches 1 in
  // magnitude (within 1e-12), i.e. the matrix is numerically singular.
  static IncrementModel factorize(std::span<const double> autocov, std::size_t order);

  std::size_t order() const { return vars_.size(); }

  // Innovation variances v_0 .. v_{order-1} and reflection coefficients
  // rho_1 .. rho_{order-1}.
  double innovation_variance(std::size_t j) const { return vars_[j]; }
  double reflection(std::size_t j) const { return refl_[j]; }
  const std::vector<double>& autocov() const { return autocov_; }

  // Solves A x = rhs by the Levinson recursion followed by one step of
  // iterative refinement. Residual is O(n eps ||rhs||) even when the matrix
  // is badly conditioned.
  std::vector<double> solve(std::span<const double> rhs) const;

  // Applies the lower-triangular innovations map to iid standard normals:
  // the output sequence has covariance exactly A (in exact arithmetic).
  // Deterministic and linear in `noise`; out may not alias noise.
  void sample(std::span<const double> noise, std::span<double> out) const;

  // A * x for this model's Toeplitz matrix.
  std::vector<double> apply(std::span<const double> x) const;

 private:
  IncrementModel() = default;
  std::vector<double> levinson_solve(std::span<const double> rhs) const;

  // Row for order k (k = 1 .. order-1) lives at offset k(k-1)/2 with length
  // k, stored so that row[i] multiplies element i of the sequence:
  //   E[eta_{k+1} | eta_1..eta_k] = sum_i row_k[i] * eta_{i+1}.
  std::vector<double> rows_;
  std::vector<double> vars_;
  std::vector<double> refl_;
  std::vector<double> autocov_;
};

// Dense Cholesky of the Toeplitz matrix built from `autocov` (test oracle;
// O(n^3), intended for n <= 1024). Returns the lower factor, row-major.
std::vector<double> dense_cholesky(std::span<const double> autocov, std::size_t n);

// y = A x with A_ij = r_{|i-j|}, for residual checks.
std::vector<double> toeplitz_apply(std::span<const double> autocov, std::span<const double> x);

}  // namespace ifbm::toeplitz
