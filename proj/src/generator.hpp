// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact sampling of IFBM paths on integer grids. A unilateral plan produces
// {y(k), k = 0..T} with y(0) = 0; a bilateral plan re-pivots the same grid at
// an interior point k0 so that both the path and its derivative vanish at the
// new origin, yielding {y(j), j = -k0..T-k0}.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kernels.hpp"
#include "toeplitz.hpp"

namespace ifbm {

// One sampled path. `origin` is the grid index of the first stored value
// (0 for unilateral paths, -k0 for bilateral ones); values[i] is y(origin+i)
// and the value at grid index 0 is exactly zero.
struct IfbmPath {
  double hurst;
  std::int64_t origin;
  std::vector<double> values;
  std::uint64_t master_seed;
  std::uint64_t sample_index;

  std::size_t t_steps() const { return values.size() - 1; }
};

// Precomputed generation plan: Toeplitz factorization of the second-increment
// sequence plus the conditional decomposition of y(1) (and, for bilateral
// plans, of the derivative at the pivot). Immutable; share freely across
// sampling workers.
class GenPlan {
 public:
  static GenPlan unilateral(const HurstParams& p, std::size_t t_steps);
  static GenPlan bilateral(const HurstParams& p, std::size_t t_steps, std::int64_t pivot);

  const HurstParams& params() const { return params_; }
  std::size_t t_steps() const { return t_steps_; }
  bool is_bilateral() const { return bilateral_.has_value(); }
  std::int64_t pivot() const { return bilateral_ ? bilateral_->pivot : 0; }

  std::size_t points() const { return t_steps_ + 1; }
  std::int64_t origin() const { return bilateral_ ? -bilateral_->pivot : 0; }
  // Normals consumed per path: T-1 for the increments, one for the
  // unpredictable part of y(1), and one more for the bilateral derivative.
  std::size_t noise_dim() const { return t_steps_ + (bilateral_ ? 1 : 0); }

  double sigma() const { return sigma_; }
  double sigma_prime() const { return bilateral_ ? bilateral_->sigma_prime : 0.0; }
  double slope_mixing() const { return bilateral_ ? bilateral_->a : 0.0; }
  const std::vector<double>& z() const { return z_; }
  const std::vector<double>& z_prime() const;
  const toeplitz::IncrementModel& model() const { return model_; }

  // The deterministic linear map noise -> path values. This is the exact
  // object whose covariance is checked against the gamma kernel.
  void generate_from_noise(std::span<const double> noise, std::span<double> values) const;

  // Draws noise_dim() standard normals from the per-sample stream and applies
  // generate_from_noise. Pure function of (plan, master_seed, sample_index).
  IfbmPath generate(std::uint64_t master_seed, std::uint64_t sample_index) const;

 private:
  struct BilateralPart {
    std::int64_t pivot;
    std::vector<double> z_prime;
    double a;
    double sigma_prime;
  };

  GenPlan(const HurstParams& p, std::size_t t_steps);

  HurstParams params_;
  std::size_t t_steps_;
  toeplitz::IncrementModel model_;
  std::vector<double> z_;
  double sigma_ = 0.0;
  std::optional<BilateralPart> bilateral_;
};

}  // namespace ifbm
