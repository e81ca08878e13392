// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Estimation of the exponent theta in F(x) ~ C x^theta near zero, from
// samples restricted to a window (lo, hi]: maximum likelihood under a
// truncated power law, plus a log-log ECDF slope as a cross-check.

#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pathstats.hpp"

namespace ifbm::powerlaw {

struct PowerLawFit {
  double theta;
  double std_err;
  double lo;
  double hi;
  std::size_t n_window;
  enum class Method { mle, slope } method;
  // False when the score had no root inside the bracket; theta then holds the
  // bracket endpoint estimate.
  bool converged;
};

// MLE for the density theta x^{theta-1} / (hi^theta - lo^theta) on (lo, hi],
// fitted to the samples falling in the window. The score equation is solved
// by bisection-safeguarded Newton on theta in [1e-6, 50]; the standard error
// comes from the observed information. Requires at least 30 window samples.
PowerLawFit mle_theta(std::span<const double> samples, double lo, double hi);

// Least-squares slope of log F versus log x on n_points log-spaced abscissae.
PowerLawFit slope_theta(const std::function<double(double)>& cdf, double lo, double hi,
                        int n_points);
PowerLawFit slope_theta(const pathstats::Ecdf& ecdf, double lo, double hi, int n_points);

// The standard fitting windows (1e-3 * i, 1e-2 * i), i = 1..5.
std::vector<std::pair<double, double>> default_windows();

// Clamps the window bottom to the grid-resolution guard 10/T; distributions
// of grid statistics bend below ten sampling intervals and those samples are
// never used for fitting.
std::pair<double, double> guarded_window(std::pair<double, double> window, std::size_t t_steps);

// A multi-window fit is "stable" when max(theta) - min(theta) among converged
// fits is below three times the largest standard error.
bool stable(std::span<const PowerLawFit> fits);

}  // namespace ifbm::powerlaw
