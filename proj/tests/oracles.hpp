// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent numerical oracles for the test suites. Nothing here reuses the
// closed forms under test: the IFBM covariance comes from 2D quadrature of
// the FBM covariance, power-law samples from the inverse CDF, and so on.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace oracle {

// FBM covariance (|u|^2H + |v|^2H - |u-v|^2H) / 2.
double fbm_cov(double hurst, double u, double v);

// E y(t) y(s) by nested adaptive quadrature of fbm_cov over [0,t] x [0,s],
// with the inner integral split at the |u-v| kink. Absolute accuracy ~1e-9.
double gamma_quadrature(double hurst, double t, double s);

// d/dt of the closed-form IFBM covariance, central difference with step 1e-5.
double dgamma_dt(double hurst, double t, double s);

// Inverse-CDF draw from the truncated power law theta x^{theta-1} /
// (hi^theta - lo^theta) on (lo, hi).
double power_window_sample(double theta, double lo, double hi, double u);

// Endpoints of the middle-thirds construction at the given depth
// (2^{depth+1} points in [0, 1]).
std::vector<double> cantor_points(int depth);

// Two-sample Kolmogorov-Smirnov statistic; inputs need not be sorted.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace oracle
