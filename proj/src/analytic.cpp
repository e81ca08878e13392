// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include "analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "error.hpp"
#include "generator.hpp"
#include "mc.hpp"
#include "rng.hpp"
#include "toeplitz.hpp"

namespace ifbm::analytic {

TimeChangePair::TimeChangePair(double h0_, double h_) : h0(h0_), h(h_) {
  require(h0 > 0.5 && h0 <= h && h < 1.0, errc::invalid_argument,
          "time change needs 1/2 < H0 <= H < 1");
  q0 = 2.0 * h0 + 2.0;
  q = 2.0 * h + 2.0;
  theta = q0 / q;
}

double beta_q(const TimeChangePair& pair, double t, double s) {
  require(s > 0.0 && s <= t, errc::domain_error, "arguments must satisfy 0 < s <= t");
  const double q0 = pair.q0;
  const double th = pair.theta;
  const double rho = s / t;
  const double rho_th = std::pow(rho, th);
  const double bracket = std::pow(1.0 - rho_th, q0 / th) - 1.0 - std::pow(rho, q0);
  const double val =
      q0 / (q0 - th) * (rho_th + std::pow(rho, q0 - th)) + bracket * th / (q0 - th);
  return 0.5 * std::pow(t, q0) * val;
}

double slepian_gap(const TimeChangePair& pair, int lattice) {
  require(lattice >= 2, errc::invalid_argument, "lattice must have at least two points");
  const TimeChangePair base(pair.h0, pair.h0);  // identity time change
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= lattice; ++i) {
    const double t = static_cast<double>(i) / lattice;
    for (int j = 1; j <= i; ++j) {
      const double s = static_cast<double>(j) / lattice;
      min_gap = std::min(min_gap, beta_q(pair, t, s) - beta_q(base, t, s));
    }
  }
  return min_gap;
}

RTerms r_terms(const TimeChangePair& pair, double rho) {
  require(rho > 0.0 && rho < 1.0, errc::domain_error, "correlation ratio must be in (0,1)");
  require(pair.q > pair.q0, errc::domain_error, "R terms need H > H0");
  const double q = pair.q;
  const double q0 = pair.q0;
  const double y = std::pow(rho, pair.theta);
  const double ybar = 1.0 - y;

  RTerms out;
  out.r1 = (1.0 - std::pow(y, q - 1.0) - std::pow(ybar, q - 1.0)) / (q - 1.0) -
           (std::pow(ybar, q0 - 1.0) - std::pow(ybar, q - 1.0)) / (q - q0);

  const double log_inv = -std::log(rho);
  auto integrand = [&](double alpha) {
    const double ra = std::pow(rho, alpha);
    return ra - std::pow(rho, q0 - alpha) - std::pow(1.0 - ra, q0 - 1.0) * ra;
  };
  const double integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, pair.theta, 1.0, 12, 1e-12);
  out.r2 = integral * log_inv;
  return out;
}

double psi_inequality_worst_z(std::span<const double> g_samples, int bins) {
  require(bins >= 10, errc::invalid_argument, "need at least 10 bins");
  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  std::size_t n = 0;
  for (double x : g_samples) {
    if (x <= 0.0 || x >= 1.0) continue;
    const auto idx = std::min(static_cast<std::size_t>(x * bins), counts.size() - 1);
    ++counts[idx];
    ++n;
  }
  require(n >= 10000, errc::too_few_samples,
          "need at least 10^4 interior samples, got " + std::to_string(n));

  const double nd = static_cast<double>(n);
  const double bd = static_cast<double>(bins);
  std::vector<double> psi(counts.size()), se(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double p = static_cast<double>(counts[i]) / nd;
    psi[i] = p * bd;
    se[i] = bd * std::sqrt(p * (1.0 - p) / nd);
  }

  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t ti = 0; ti < counts.size(); ++ti) {
    const double t = (static_cast<double>(ti) + 0.5) / bd;
    for (std::size_t si = 0; si < counts.size(); ++si) {
      if (si == ti) continue;
      const double s = (static_cast<double>(si) + 0.5) / bd;
      const double factor = std::max(s / t, (1.0 - s) / (1.0 - t));
      const double slack = psi[si] * factor - psi[ti];
      const double err = std::sqrt(se[ti] * se[ti] + factor * factor * se[si] * se[si]);
      if (err == 0.0) continue;
      worst = std::min(worst, slack / err);
    }
  }
  return worst;
}

std::vector<double> fbm_argmax_samples(const HurstParams& p, std::size_t t_steps, std::size_t n,
                                       std::uint64_t master_seed, int workers) {
  require(t_steps >= 2, errc::invalid_argument, "grid must have at least two steps");
  // Fractional Gaussian noise autocovariance of the unit-step increments.
  std::vector<double> acov(t_steps);
  const double two_h = 2.0 * p.hurst;
  for (std::size_t k = 0; k < t_steps; ++k) {
    const double kd = static_cast<double>(k);
    acov[k] = 0.5 * (std::pow(kd + 1.0, two_h) - 2.0 * std::pow(kd, two_h) +
                     std::pow(std::abs(kd - 1.0), two_h));
  }
  const auto model = toeplitz::IncrementModel::factorize(acov, t_steps);

  std::vector<double> out(n);
  mc::parallel_for(n, workers, [&](std::size_t i) {
    PathRng rng(master_seed, i);
    std::vector<double> noise(t_steps), incr(t_steps);
    for (double& w : noise) w = rng.normal();
    model.sample(noise, incr);
    double b = 0.0, bmax = 0.0;
    std::size_t imax = 0;
    for (std::size_t k = 1; k <= t_steps; ++k) {
      b += incr[k - 1];
      if (b > bmax) {
        bmax = b;
        imax = k;
      }
    }
    out[i] = static_cast<double>(imax) / static_cast<double>(t_steps);
  });
  return out;
}

FmMonotonicity fm_monotonicity_mc(std::span<const double> h_grid, std::span<const double> x_grid,
                                  std::size_t n, std::size_t t_steps, std::uint64_t master_seed,
                                  int workers) {
  require(!h_grid.empty() && !x_grid.empty(), errc::invalid_argument, "empty grid");
  for (double h : h_grid)
    require(h > 0.5 && h < 1.0, errc::invalid_argument, "monotonicity holds on (1/2, 1)");
  for (std::size_t i = 1; i < h_grid.size(); ++i)
    require(h_grid[i] > h_grid[i - 1], errc::invalid_argument, "H grid must increase");

  FmMonotonicity out;
  out.h_grid.assign(h_grid.begin(), h_grid.end());
  out.x_grid.assign(x_grid.begin(), x_grid.end());
  out.cdf.assign(h_grid.size() * x_grid.size(), 0.0);

  for (std::size_t hi = 0; hi < h_grid.size(); ++hi) {
    const HurstParams p(h_grid[hi]);
    const GenPlan plan = GenPlan::unilateral(p, t_steps);
    const double scale =
        std::sqrt(p.q) * std::pow(static_cast<double>(t_steps), -(1.0 + p.hurst));
    std::vector<double> maxima(n);
    mc::parallel_for(n, workers, [&](std::size_t i) {
      const IfbmPath path = plan.generate(master_seed, i);
      double m = 0.0;
      for (double v : path.values) m = std::max(m, v);
      maxima[i] = m * scale;
    });
    for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
      std::size_t c = 0;
      for (double m : maxima)
        if (m <= x_grid[xi]) ++c;
      out.cdf[hi * x_grid.size() + xi] = static_cast<double>(c) / static_cast<double>(n);
    }
  }

  double worst = std::numeric_limits<double>::infinity();
  const double nd = static_cast<double>(n);
  for (std::size_t hi = 0; hi + 1 < h_grid.size(); ++hi) {
    for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
      const double f0 = out.cdf[hi * x_grid.size() + xi];
      const double f1 = out.cdf[(hi + 1) * x_grid.size() + xi];
      const double pooled = 0.5 * (f0 + f1);
      const double se = std::sqrt(std::max(pooled * (1.0 - pooled) * 2.0 / nd, 1e-300));
      worst = std::min(worst, (f1 - f0) / se);
    }
  }
  out.worst_z = worst;
  return out;
}

}  // namespace ifbm::analytic
