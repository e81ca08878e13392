// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include "powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace ifbm::powerlaw {
namespace {

constexpr double kThetaMin = 1e-6;
constexpr double kThetaMax = 50.0;

}  // namespace

PowerLawFit mle_theta(std::span<const double> samples, double lo, double hi) {
  require(lo > 0.0 && lo < hi, errc::invalid_argument, "window must satisfy 0 < lo < hi");

  double sum_log = 0.0;  // sum of ln(x / lo) over window samples
  std::size_t n = 0;
  for (double x : samples) {
    if (x > lo && x <= hi) {
      sum_log += std::log(x / lo);
      ++n;
    }
  }
  require(n >= 30, errc::too_few_samples,
          "window holds " + std::to_string(n) + " samples; at least 30 required");

  const double nd = static_cast<double>(n);
  const double big_l = std::log(hi / lo);
  // score(theta) = n/theta + sum_log - n L / (1 - r^{-theta}),  r = hi/lo.
  auto score = [&](double th) {
    return nd / th + sum_log - nd * big_l / (-std::expm1(-th * big_l));
  };
  auto score_deriv = [&](double th) {
    const double em = std::exp(-th * big_l);
    const double denom = -std::expm1(-th * big_l);
    return -nd / (th * th) + nd * big_l * big_l * em / (denom * denom);
  };

  PowerLawFit fit;
  fit.lo = lo;
  fit.hi = hi;
  fit.n_window = n;
  fit.method = PowerLawFit::Method::mle;
  fit.converged = true;

  // The likelihood is strictly concave, so the score decreases monotonically
  // and score(0+) = +inf; a root is missing only when score stays positive.
  double a = kThetaMin;
  double b = kThetaMax;
  double fa = score(a);
  double fb = score(b);
  if (fa <= 0.0 || fb >= 0.0) {
    fit.converged = false;
    fit.theta = fa <= 0.0 ? kThetaMin : kThetaMax;
  } else {
    double th = std::clamp(nd / std::max(sum_log, 1e-300), a, b);  // untruncated estimate
    for (int it = 0; it < 200; ++it) {
      const double f = score(th);
      if (f > 0.0)
        a = th;
      else
        b = th;
      const double d = score_deriv(th);
      double next = th - f / d;
      if (!(next > a && next < b)) next = 0.5 * (a + b);
      if (std::abs(next - th) <= 1e-14 * th) {
        th = next;
        break;
      }
      th = next;
    }
    fit.theta = th;
  }

  const double em = std::exp(-fit.theta * big_l);
  const double denom = -std::expm1(-fit.theta * big_l);
  const double info =
      nd / (fit.theta * fit.theta) - nd * big_l * big_l * em / (denom * denom);
  fit.std_err = info > 0.0 ? 1.0 / std::sqrt(info) : 0.0;
  return fit;
}

PowerLawFit slope_theta(const std::function<double(double)>& cdf, double lo, double hi,
                        int n_points) {
  require(lo > 0.0 && lo < hi, errc::invalid_argument, "window must satisfy 0 < lo < hi");
  require(n_points >= 2, errc::invalid_argument, "need at least two abscissae");

  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / (n_points - 1);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n_points; ++i) {
    const double lx = log_lo + step * i;
    const double f = cdf(std::exp(lx));
    require(f > 0.0, errc::no_data, "empirical CDF vanishes inside the window");
    const double ly = std::log(f);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double nd = n_points;
  PowerLawFit fit;
  fit.lo = lo;
  fit.hi = hi;
  fit.n_window = static_cast<std::size_t>(n_points);
  fit.method = PowerLawFit::Method::slope;
  fit.converged = true;
  fit.theta = (nd * sxy - sx * sy) / (nd * sxx - sx * sx);
  fit.std_err = 0.0;
  return fit;
}

PowerLawFit slope_theta(const pathstats::Ecdf& ecdf, double lo, double hi, int n_points) {
  return slope_theta([&ecdf](double x) { return ecdf(x); }, lo, hi, n_points);
}

std::vector<std::pair<double, double>> default_windows() {
  std::vector<std::pair<double, double>> w;
  for (int i = 1; i <= 5; ++i) w.emplace_back(1e-3 * i, 1e-2 * i);
  return w;
}

std::pair<double, double> guarded_window(std::pair<double, double> window, std::size_t t_steps) {
  const double guard = 10.0 / static_cast<double>(t_steps);
  window.first = std::max(window.first, guard);
  return window;
}

bool stable(std::span<const PowerLawFit> fits) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double max_err = 0.0;
  std::size_t n = 0;
  for (const auto& f : fits) {
    if (!f.converged) continue;
    lo = std::min(lo, f.theta);
    hi = std::max(hi, f.theta);
    max_err = std::max(max_err, f.std_err);
    ++n;
  }
  if (n < 2) return false;
  return hi - lo < 3.0 * max_err;
}

}  // namespace ifbm::powerlaw
