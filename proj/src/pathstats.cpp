// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include "pathstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace ifbm::pathstats {

PathStats extract(double hurst, std::int64_t origin, std::span<const double> values) {
  require(values.size() >= 2, errc::empty_path, "path needs at least two grid points");
  const std::size_t steps = values.size() - 1;
  const double t = static_cast<double>(steps);

  std::size_t imax = 0;
  double vmax = values[0];
  std::size_t n_positive = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > vmax) {
      vmax = values[i];
      imax = i;
    }
    if (values[i] > 0.0) ++n_positive;
  }

  PathStats s;
  s.max_value = vmax * std::pow(t, -(1.0 + hurst));
  s.argmax_pos = static_cast<double>(origin + static_cast<std::int64_t>(imax)) / t;
  s.occupation = static_cast<double>(n_positive) / static_cast<double>(values.size());
  s.atom = vmax <= 0.0;
  s.last_zero = std::numeric_limits<double>::quiet_NaN();

  if (origin == 0) {
    // Rightmost sign change after the structural zero at k = 0, crossing
    // located by linear interpolation. Z = 0 when the path never returns.
    s.last_zero = 0.0;
    for (std::size_t k = steps - 1; k >= 1; --k) {
      if (values[k] * values[k + 1] <= 0.0) {
        const double d = values[k] - values[k + 1];
        const double frac = d == 0.0 ? 0.5 : values[k] / d;
        s.last_zero = (static_cast<double>(k) + frac) / t;
        break;
      }
    }
  }
  return s;
}

PathStats extract(const IfbmPath& path) { return extract(path.hurst, path.origin, path.values); }

Ecdf Ecdf::build(std::span<const double> values, std::span<const std::uint8_t> atom_flags,
                 bool exclude_atoms) {
  require(!values.empty(), errc::no_data, "no samples");
  require(atom_flags.empty() || atom_flags.size() == values.size(), errc::dimension_mismatch,
          "atom flag vector must match the sample vector");
  Ecdf e;
  e.total_ = values.size();
  std::size_t atoms = 0;
  e.sorted_.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool is_atom = !atom_flags.empty() && atom_flags[i] != 0;
    if (is_atom) ++atoms;
    if (is_atom && exclude_atoms) continue;
    e.sorted_.push_back(values[i]);
  }
  e.atom_mass_ = static_cast<double>(atoms) / static_cast<double>(values.size());
  require(!e.sorted_.empty(), errc::no_data,
          "every sample is atom-flagged (atom mass " + std::to_string(e.atom_mass_) + ")");
  std::sort(e.sorted_.begin(), e.sorted_.end());
  return e;
}

Ecdf Ecdf::build(std::span<const double> values) { return build(values, {}, false); }

double Ecdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double Ecdf::quantile(double p) const {
  require(p >= 0.0 && p <= 1.0, errc::invalid_argument, "quantile level must be in [0,1]");
  if (p <= 0.0) return sorted_.front();
  const auto n = static_cast<double>(sorted_.size());
  const std::size_t idx = static_cast<std::size_t>(std::ceil(p * n));
  return sorted_[std::min(idx == 0 ? 0 : idx - 1, sorted_.size() - 1)];
}

double Ecdf::min() const { return sorted_.front(); }

PersistenceProbs persistence_probs(std::span<const PathStats> stats, const HurstParams& p,
                                   double t_eval, double grid_lo, double grid_hi) {
  require(!stats.empty(), errc::no_data, "no samples");
  require(t_eval >= 1.0, errc::invalid_argument, "evaluation horizon must be at least 1");

  const double x_max = std::pow(t_eval, -(1.0 + p.hurst));
  const double x_pos = 1.0 / t_eval;
  const std::size_t n = stats.size();

  std::size_t le_max = 0;
  std::size_t le_absg = 0;
  std::size_t atoms = 0;
  std::size_t not_right = 0;
  std::size_t interior = 0;
  std::size_t interior_occ_le = 0;
  double min_positive_max = std::numeric_limits<double>::infinity();
  for (const PathStats& s : stats) {
    if (s.max_value <= x_max) ++le_max;
    if (std::abs(s.argmax_pos) <= x_pos) ++le_absg;
    if (s.atom) ++atoms;
    if (s.max_value > 0.0) min_positive_max = std::min(min_positive_max, s.max_value);
    const bool at_left = s.argmax_pos == grid_lo;
    const bool at_right = s.argmax_pos == grid_hi;
    if (!at_right) ++not_right;
    if (!at_left && !at_right) {
      ++interior;
      if (s.occupation <= x_pos) ++interior_occ_le;
    }
  }

  PersistenceProbs out;
  out.p_max_is_lower_bound = x_max < min_positive_max;
  out.p_max = out.p_max_is_lower_bound ? static_cast<double>(atoms) / static_cast<double>(n)
                                       : static_cast<double>(le_max) / static_cast<double>(n);
  out.p_argmax = static_cast<double>(le_absg) / static_cast<double>(n);
  const double f_a = interior == 0 ? 0.0
                                   : static_cast<double>(interior_occ_le) /
                                         static_cast<double>(interior);
  out.p_occupation = f_a * static_cast<double>(not_right) / static_cast<double>(n);
  return out;
}

}  // namespace ifbm::pathstats
