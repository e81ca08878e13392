// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic and statistical verification of the closed-form properties
// behind the generator: the time-changed correlation beta_q, the Slepian
// comparison between different similarity exponents, the R1/R2 positivity
// terms, the argmax-density inequality, and the maximum-CDF monotonicity.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kernels.hpp"

namespace ifbm::analytic {

// Time change xi_q(t) = sqrt(q) * y(t^theta) with theta = q0/q, which maps an
// IFBM with exponent q = 2H+2 onto the variance profile of exponent
// q0 = 2H0+2. Requires 1/2 < H0 <= H < 1.
struct TimeChangePair {
  double h0;
  double h;
  double q0;
  double q;
  double theta;

  TimeChangePair(double h0_, double h_);
};

// Correlation beta_q(t, s) = E xi_q(t) xi_q(s) for 0 < s <= t:
//   2 t^{-q0} beta_q = q0/(q0-theta) (rho^theta + rho^{q0-theta})
//                    + ((1-rho^theta)^{q0/theta} - 1 - rho^{q0}) theta/(q0-theta),
// rho = s/t. Identical to q * gamma(t^theta, s^theta).
double beta_q(const TimeChangePair& pair, double t, double s);

// min over the lattice {(i/n, j/n), j <= i} of beta_q - beta_{q0}; the
// comparison theorem says this is nonnegative for H > H0 > 1/2.
double slepian_gap(const TimeChangePair& pair, int lattice);

struct RTerms {
  double r1;
  double r2;
};

// The two positivity terms of the covariance gap at correlation ratio rho:
//   R1 = (1 - y^{q-1} - (1-y)^{q-1})/(q-1) - ((1-y)^{q0-1} - (1-y)^{q-1})/(q-q0),
//        y = rho^theta,
//   R2 = ln(1/rho) * integral_theta^1 [rho^a - rho^{q0-a} - (1-rho^a)^{q0-1} rho^a] da.
// Requires H > H0 (the gap normalization divides by q - q0).
RTerms r_terms(const TimeChangePair& pair, double rho);

// Histogram check of psi(t) <= psi(s) max(s/t, (1-s)/(1-t)) for the argmax
// density on (0,1): the most negative slack over ordered bin pairs, in
// pooled binomial standard errors. Samples outside the open interval are
// ignored; at least 10^4 interior samples are required.
double psi_inequality_worst_z(std::span<const double> g_samples, int bins);

// Leftmost argmax positions of exact FBM paths on {0..T}/T, one per sample.
// The increments are drawn through the Toeplitz factorization of the
// fractional Gaussian noise autocovariance, so the discrete law is exact.
std::vector<double> fbm_argmax_samples(const HurstParams& p, std::size_t t_steps, std::size_t n,
                                       std::uint64_t master_seed, int workers);

struct FmMonotonicity {
  std::vector<double> h_grid;
  std::vector<double> x_grid;
  std::vector<double> cdf;  // row-major [h][x], CDF of max of sqrt(2H+2) y(t)
  double worst_z;           // most negative monotonicity slack in pooled SE
};

// Empirical CDF of the normalized maximum for each H; the CDF should be
// nondecreasing in H on (1/2, 1) at every x.
FmMonotonicity fm_monotonicity_mc(std::span<const double> h_grid, std::span<const double> x_grid,
                                  std::size_t n, std::size_t t_steps, std::uint64_t master_seed,
                                  int workers);

}  // namespace ifbm::analytic
