// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Small-value statistics of a sampled path: maximum, argmax position,
// occupation time above zero, rightmost zero, and the grid atom bookkeeping,
// plus empirical distribution helpers built on them.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "generator.hpp"
#include "kernels.hpp"

namespace ifbm::pathstats {

// All positions are in rescaled coordinates x = k / T, so a unilateral grid
// maps to [0, 1] and a bilateral grid with pivot k0 to [-k0/T, 1 - k0/T].
// The maximum is rescaled by T^{-(1+H)} to the unit-interval process.
struct PathStats {
  double max_value;    // M
  double argmax_pos;   // G, leftmost tie
  double occupation;   // A+, fraction of grid points strictly above zero
  double last_zero;    // Z, NaN for bilateral paths
  bool atom;           // y(k) <= 0 for every k != 0, i.e. M == 0
};

PathStats extract(double hurst, std::int64_t origin, std::span<const double> values);
PathStats extract(const IfbmPath& path);

// Right-continuous empirical CDF. Atom-flagged samples can be excluded, in
// which case their mass is kept on the side.
class Ecdf {
 public:
  // atom_flags may be empty (nothing excluded) or one flag per value.
  static Ecdf build(std::span<const double> values, std::span<const std::uint8_t> atom_flags,
                    bool exclude_atoms);
  static Ecdf build(std::span<const double> values);

  double operator()(double x) const;  // fraction of retained samples <= x
  double quantile(double p) const;    // smallest retained sample with F >= p
  double min() const;
  std::size_t size() const { return sorted_.size(); }
  std::size_t total() const { return total_; }
  double atom_mass() const { return atom_mass_; }

 private:
  std::vector<double> sorted_;
  double atom_mass_ = 0.0;
  std::size_t total_ = 0;
};

struct PersistenceProbs {
  double p_max;         // F_M(T^{-(1+H)})
  double p_argmax;      // F_|G|(1/T)
  double p_occupation;  // F^_A(1/T) * F_G(right endpoint - 0)
  // Set when T^{-(1+H)} fell below the smallest positive maximum; p_max then
  // equals the atom mass and is only a lower bound.
  bool p_max_is_lower_bound;
};

// grid_lo/grid_hi are the rescaled endpoints of the observation interval
// (0 and 1 for unilateral paths). The occupation distribution is conditioned
// on the argmax lying strictly inside the interval.
PersistenceProbs persistence_probs(std::span<const PathStats> stats, const HurstParams& p,
                                   double t_eval, double grid_lo, double grid_hi);

}  // namespace ifbm::pathstats
