// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include "generator.hpp"

#include <cmath>

#include "error.hpp"
#include "rng.hpp"

namespace ifbm {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

GenPlan::GenPlan(const HurstParams& p, std::size_t t_steps)
    : params_(p),
      t_steps_(t_steps),
      model_(toeplitz::IncrementModel::factorize(kernels::mu_sequence(p, t_steps - 1),
                                                 t_steps - 1)) {}

GenPlan GenPlan::unilateral(const HurstParams& p, std::size_t t_steps) {
  require(t_steps >= 2, errc::invalid_argument, "grid must have at least two steps");
  GenPlan plan(p, t_steps);
  const std::vector<double> m = kernels::m_vec(p, t_steps);
  plan.z_ = plan.model_.solve(m);
  const double sigma2 = 1.0 / p.q - dot(plan.z_, m);
  require(sigma2 >= -1e-10, errc::negative_variance,
          "conditional variance of y(1) came out negative");
  plan.sigma_ = std::sqrt(std::max(sigma2, 0.0));
  return plan;
}

GenPlan GenPlan::bilateral(const HurstParams& p, std::size_t t_steps, std::int64_t pivot) {
  require(pivot >= 1 && pivot <= static_cast<std::int64_t>(t_steps) - 1, errc::invalid_argument,
          "pivot must satisfy 1 <= k0 <= T-1");
  GenPlan plan = unilateral(p, t_steps);
  require(plan.sigma_ > 0.0, errc::degenerate_pivot,
          "unpredictable part of y(1) vanished; cannot condition the derivative");

  const std::vector<double> mp = kernels::m_prime_vec(p, t_steps, pivot);
  BilateralPart bp;
  bp.pivot = pivot;
  bp.z_prime = plan.model_.solve(mp);
  const double sigma_a = kernels::y1_slope_cov(p, pivot) - dot(plan.z_, mp);
  bp.a = sigma_a / plan.sigma_;
  const double sp2 =
      std::pow(static_cast<double>(pivot), 2.0 * p.hurst) - dot(bp.z_prime, mp) - bp.a * bp.a;
  require(sp2 >= -1e-10, errc::negative_variance,
          "conditional variance of the pivot derivative came out negative");
  bp.sigma_prime = std::sqrt(std::max(sp2, 0.0));
  plan.bilateral_ = std::move(bp);
  return plan;
}

const std::vector<double>& GenPlan::z_prime() const {
  require(bilateral_.has_value(), errc::invalid_argument, "plan has no bilateral part");
  return bilateral_->z_prime;
}

void GenPlan::generate_from_noise(std::span<const double> noise,
                                  std::span<double> values) const {
  require(noise.size() == noise_dim(), errc::dimension_mismatch,
          "noise length must equal noise_dim()");
  require(values.size() == points(), errc::dimension_mismatch,
          "output length must equal points()");
  const std::size_t order = t_steps_ - 1;

  std::vector<double> eta(order);
  model_.sample(noise.first(order), eta);
  const double y1 = dot(z_, eta) + sigma_ * noise[order];

  if (!bilateral_) {
    values[0] = 0.0;
    values[1] = y1;
    for (std::size_t k = 1; k < t_steps_; ++k)
      values[k + 1] = 2.0 * values[k] - values[k - 1] + eta[k - 1];
    return;
  }

  std::vector<double> y(points());
  y[0] = 0.0;
  y[1] = y1;
  for (std::size_t k = 1; k < t_steps_; ++k) y[k + 1] = 2.0 * y[k] - y[k - 1] + eta[k - 1];

  const auto& bp = *bilateral_;
  const double slope = dot(bp.z_prime, eta) + bp.a * noise[order] + bp.sigma_prime * noise[order + 1];
  const double yk0 = y[static_cast<std::size_t>(bp.pivot)];
  for (std::size_t i = 0; i < y.size(); ++i)
    values[i] = y[i] - yk0 - slope * (static_cast<double>(i) - static_cast<double>(bp.pivot));
}

IfbmPath GenPlan::generate(std::uint64_t master_seed, std::uint64_t sample_index) const {
  PathRng rng(master_seed, sample_index);
  std::vector<double> noise(noise_dim());
  for (double& w : noise) w = rng.normal();
  IfbmPath path;
  path.hurst = params_.hurst;
  path.origin = origin();
  path.master_seed = master_seed;
  path.sample_index = sample_index;
  path.values.resize(points());
  generate_from_noise(noise, path.values);
  return path;
}

}  // namespace ifbm
