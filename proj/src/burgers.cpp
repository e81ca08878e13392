// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include "burgers.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "mc.hpp"
#include "rng.hpp"

namespace ifbm::burgers {

MinorantResult convex_minorant(std::span<const double> f) {
  require(f.size() >= 2, errc::invalid_argument, "need at least two grid points");
  for (double v : f)
    require(std::isfinite(v), errc::invalid_argument, "function values must be finite");

  std::vector<std::size_t> hull;
  hull.reserve(16);
  for (std::size_t i = 0; i < f.size(); ++i) {
    while (hull.size() >= 2) {
      const std::size_t j1 = hull[hull.size() - 2];
      const std::size_t j2 = hull[hull.size() - 1];
      // Drop j2 unless it lies strictly below the chord j1 -> i.
      const double a = static_cast<double>(j2 - j1) * (f[i] - f[j1]);
      const double b = static_cast<double>(i - j1) * (f[j2] - f[j1]);
      const double cross = a - b;
      if (cross <= 1e-12 * std::max(std::abs(a), std::abs(b)))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }

  MinorantResult out;
  out.vertices = std::move(hull);
  out.slopes.reserve(out.vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < out.vertices.size(); ++i) {
    const std::size_t j1 = out.vertices[i];
    const std::size_t j2 = out.vertices[i + 1];
    out.slopes.push_back((f[j2] - f[j1]) / static_cast<double>(j2 - j1));
  }
  return out;
}

std::vector<double> lagrangian_points(const IfbmPath& path) {
  require(path.origin < 0, errc::invalid_argument,
          "Lagrangian point extraction needs a bilateral path");
  const std::size_t n = path.values.size();
  const double t = static_cast<double>(path.t_steps());
  const double parab = 0.5 * std::pow(t, path.hurst - 1.0);

  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = static_cast<double>(path.origin + static_cast<std::int64_t>(i));
    f[i] = path.values[i] + parab * k * k;
  }
  const MinorantResult hull = convex_minorant(f);
  std::vector<double> coords;
  coords.reserve(hull.vertices.size());
  for (std::size_t v : hull.vertices)
    coords.push_back(static_cast<double>(path.origin + static_cast<std::int64_t>(v)) / t);
  return coords;
}

std::vector<std::size_t> box_counts(std::span<const double> points,
                                    std::span<const double> deltas) {
  require(!points.empty(), errc::too_few_samples, "no points to count");
  std::vector<std::size_t> counts;
  counts.reserve(deltas.size());
  std::vector<std::int64_t> boxes;
  for (double delta : deltas) {
    require(delta > 0.0, errc::invalid_argument, "box length must be positive");
    boxes.clear();
    boxes.reserve(2 * points.size());
    const double stride = 0.5 * delta;
    for (double x : points) {
      // x lies in the two half-overlapping boxes [m*d/2, m*d/2 + d).
      const auto m = static_cast<std::int64_t>(std::floor(x / stride));
      boxes.push_back(m);
      boxes.push_back(m - 1);
    }
    std::sort(boxes.begin(), boxes.end());
    counts.push_back(
        static_cast<std::size_t>(std::unique(boxes.begin(), boxes.end()) - boxes.begin()));
  }
  return counts;
}

namespace {

double loglog_slope(std::span<const double> deltas, std::span<const double> log_counts) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double nd = static_cast<double>(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double lx = std::log(1.0 / deltas[i]);
    const double ly = log_counts[i];
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (nd * sxy - sx * sy) / (nd * sxx - sx * sx);
}

}  // namespace

BoxCountFit box_count_dim(std::span<const double> points, std::span<const double> deltas) {
  require(deltas.size() >= 2, errc::invalid_argument, "need at least two scales");
  BoxCountFit fit;
  fit.deltas.assign(deltas.begin(), deltas.end());
  fit.counts = box_counts(points, deltas);
  std::vector<double> logs(fit.counts.size());
  for (std::size_t i = 0; i < logs.size(); ++i)
    logs[i] = std::log(static_cast<double>(fit.counts[i]));
  fit.dim = loglog_slope(deltas, logs);
  return fit;
}

std::vector<double> default_scales(std::size_t t_steps) {
  require(t_steps >= 128, errc::invalid_argument,
          "grid too short for the default scale ladder (need T >= 128)");
  int jmax = 0;
  while ((std::size_t{1} << (jmax + 1)) <= t_steps) ++jmax;
  std::vector<double> deltas;
  for (int j = 3; j <= jmax - 3; ++j) deltas.push_back(std::ldexp(1.0, -j));
  return deltas;
}

DimExperiment dim_experiment(const HurstParams& p, std::size_t t_steps, std::size_t n_paths,
                             std::uint64_t master_seed, int workers,
                             std::span<const double> deltas) {
  require(n_paths >= 1, errc::invalid_argument, "need at least one path");
  require(deltas.size() >= 2, errc::invalid_argument, "need at least two scales");
  const std::int64_t pivot = static_cast<std::int64_t>((t_steps + 1) / 2);
  const GenPlan plan = GenPlan::bilateral(p, t_steps, pivot);

  const std::size_t ns = deltas.size();
  std::vector<double> per_path_logs(n_paths * ns);
  mc::parallel_for(n_paths, workers, [&](std::size_t i) {
    const IfbmPath path = plan.generate(master_seed, i);
    const std::vector<double> pts = lagrangian_points(path);
    const std::vector<std::size_t> counts = box_counts(pts, deltas);
    for (std::size_t s = 0; s < ns; ++s)
      per_path_logs[i * ns + s] = std::log(static_cast<double>(counts[s]));
  });

  DimExperiment out;
  out.deltas.assign(deltas.begin(), deltas.end());
  out.paths = n_paths;
  out.mean_log_counts.assign(ns, 0.0);
  for (std::size_t i = 0; i < n_paths; ++i)
    for (std::size_t s = 0; s < ns; ++s) out.mean_log_counts[s] += per_path_logs[i * ns + s];
  for (double& v : out.mean_log_counts) v /= static_cast<double>(n_paths);
  out.dim = loglog_slope(deltas, out.mean_log_counts);

  // Bootstrap over paths with a stream derived from the master seed.
  const int b_count = 200;
  std::uint64_t st = master_seed ^ 0xB0075742ULL;
  std::vector<double> mean_logs(ns);
  double acc = 0.0, acc2 = 0.0;
  for (int b = 0; b < b_count; ++b) {
    std::fill(mean_logs.begin(), mean_logs.end(), 0.0);
    for (std::size_t i = 0; i < n_paths; ++i) {
      const std::size_t pick = splitmix64_next(st) % n_paths;
      for (std::size_t s = 0; s < ns; ++s) mean_logs[s] += per_path_logs[pick * ns + s];
    }
    for (double& v : mean_logs) v /= static_cast<double>(n_paths);
    const double slope = loglog_slope(deltas, mean_logs);
    acc += slope;
    acc2 += slope * slope;
  }
  const double mean = acc / b_count;
  out.spread = std::sqrt(std::max(acc2 / b_count - mean * mean, 0.0));
  return out;
}

}  // namespace ifbm::burgers
