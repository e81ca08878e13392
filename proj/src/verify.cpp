// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>
#include <vector>

#include "error.hpp"
#include "kernels.hpp"
#include "rng.hpp"
#include "toeplitz.hpp"

namespace ifbm::verify {

double map_exactness_error(const GenPlan& plan) {
  const std::size_t nd = plan.noise_dim();
  const std::size_t pts = plan.points();
  const HurstParams& p = plan.params();

  // Columns of the linear map: path images of the noise unit vectors.
  std::vector<std::vector<double>> cols(nd, std::vector<double>(pts));
  std::vector<double> noise(nd, 0.0);
  for (std::size_t i = 0; i < nd; ++i) {
    noise[i] = 1.0;
    plan.generate_from_noise(noise, cols[i]);
    noise[i] = 0.0;
  }

  double worst = 0.0;
  for (std::size_t a = 0; a < pts; ++a) {
    const double ga = static_cast<double>(plan.origin() + static_cast<std::int64_t>(a));
    for (std::size_t b = a; b < pts; ++b) {
      const double gb = static_cast<double>(plan.origin() + static_cast<std::int64_t>(b));
      double mm = 0.0;
      for (std::size_t i = 0; i < nd; ++i) mm += cols[i][a] * cols[i][b];
      worst = std::max(worst, std::abs(mm - kernels::gamma_cov(p, ga, gb)));
    }
  }
  return worst;
}

double covariance_mc_worst_z(const GenPlan& plan, std::size_t n, std::uint64_t master_seed,
                             int workers) {
  require(n >= 100, errc::too_few_samples, "need at least 100 samples");
  const std::size_t pts = plan.points();
  const std::size_t n_acc = pts * (pts + 1) / 2;

  std::vector<double> acc(n_acc, 0.0);
  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  auto work = [&] {
    std::vector<double> local(n_acc, 0.0);
    for (;;) {
      const std::size_t begin = next.fetch_add(64);
      if (begin >= n) break;
      const std::size_t end = std::min(begin + 64, n);
      for (std::size_t i = begin; i < end; ++i) {
        const IfbmPath sample = plan.generate(master_seed, i);
        std::size_t idx = 0;
        for (std::size_t a = 0; a < pts; ++a)
          for (std::size_t b = a; b < pts; ++b)
            local[idx++] += sample.values[a] * sample.values[b];
      }
    }
    const std::lock_guard<std::mutex> lock(merge_mutex);
    for (std::size_t k = 0; k < n_acc; ++k) acc[k] += local[k];
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  const HurstParams& p = plan.params();
  double worst = 0.0;
  std::size_t idx = 0;
  for (std::size_t a = 0; a < pts; ++a) {
    const double ga = static_cast<double>(plan.origin() + static_cast<std::int64_t>(a));
    const double gaa = kernels::gamma_cov(p, ga, ga);
    for (std::size_t b = a; b < pts; ++b) {
      const double gb = static_cast<double>(plan.origin() + static_cast<std::int64_t>(b));
      const double gab = kernels::gamma_cov(p, ga, gb);
      const double gbb = kernels::gamma_cov(p, gb, gb);
      const double emp = acc[idx++] / static_cast<double>(n);
      const double var = gaa * gbb + gab * gab;  // Gaussian product variance
      if (var <= 0.0) continue;                  // structural zero at the origin
      const double se = std::sqrt(var / static_cast<double>(n));
      worst = std::max(worst, std::abs(emp - gab) / se);
    }
  }
  return worst;
}

double toeplitz_factor_error(const HurstParams& p, std::size_t order) {
  const auto acov = kernels::mu_sequence(p, order);
  const auto model = toeplitz::IncrementModel::factorize(acov, order);
  std::vector<std::vector<double>> cols(order, std::vector<double>(order));
  std::vector<double> unit(order, 0.0);
  for (std::size_t i = 0; i < order; ++i) {
    unit[i] = 1.0;
    model.sample(unit, cols[i]);
    unit[i] = 0.0;
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = a; b < order; ++b) {
      double mm = 0.0;
      for (std::size_t i = 0; i < order; ++i) mm += cols[i][a] * cols[i][b];
      worst = std::max(worst, std::abs(mm - acov[b - a]));
    }
  }
  return worst;
}

double toeplitz_solve_residual(const HurstParams& p, std::size_t order, std::uint64_t seed) {
  const auto acov = kernels::mu_sequence(p, order);
  const auto model = toeplitz::IncrementModel::factorize(acov, order);
  PathRng rng(seed, 0);
  std::vector<double> rhs(order);
  for (double& v : rhs) v = rng.normal();
  const auto x = model.solve(rhs);
  const auto ax = model.apply(x);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < order; ++i) {
    num = std::max(num, std::abs(ax[i] - rhs[i]));
    den = std::max(den, std::abs(rhs[i]));
  }
  return num / den;
}

}  // namespace ifbm::verify
