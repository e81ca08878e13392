// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Hopf construction for the inviscid Burgers equation at unit time with an
// FBM initial velocity field: the convex minorant of the velocity potential
// plus a parabola, the regular Lagrangian points where the minorant touches,
// and a box-counting estimate of their fractal dimension.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "generator.hpp"
#include "kernels.hpp"

namespace ifbm::burgers {

// Lower convex hull of {(k, f(k))}. `vertices` are the indices of the hull's
// extreme points (always including both endpoints); slopes[i] is the hull
// slope between vertices i and i+1 and increases strictly.
struct MinorantResult {
  std::vector<std::size_t> vertices;
  std::vector<double> slopes;
};

// Monotone-chain construction, O(n). Collinear triples are merged into the
// segment endpoints (relative cross-product tolerance 1e-12), so the vertex
// set is invariant under affine additions to f.
MinorantResult convex_minorant(std::span<const double> f);

// Regular Lagrangian points of a bilateral path: vertices of the convex
// minorant of f(k) = y(k) + k^2 T^{H-1} / 2, reported in the physical
// coordinate x = k / T. The parabola coefficient is the unit-time Hopf
// parabola x^2/2 carried to grid units by self-similarity.
std::vector<double> lagrangian_points(const IfbmPath& path);

struct BoxCountFit {
  double dim;                       // least-squares slope of log N vs log 1/delta
  std::vector<double> deltas;
  std::vector<std::size_t> counts;  // N(delta)
};

// Counts boxes of length delta at stride delta/2 (half-overlapping cover)
// that contain at least one point, then fits the log-log slope.
BoxCountFit box_count_dim(std::span<const double> points, std::span<const double> deltas);
std::vector<std::size_t> box_counts(std::span<const double> points,
                                    std::span<const double> deltas);

struct DimExperiment {
  double dim;                          // slope of mean log N(delta)
  double spread;                       // bootstrap standard deviation over paths
  std::vector<double> deltas;
  std::vector<double> mean_log_counts; // averaged over paths
  std::size_t paths;
};

// Generates n_paths independent bilateral paths (pivot T/2 rounded up),
// extracts Lagrangian points, averages log N(delta) over paths and fits the
// dimension; the spread comes from a deterministic bootstrap over paths.
DimExperiment dim_experiment(const HurstParams& p, std::size_t t_steps, std::size_t n_paths,
                             std::uint64_t master_seed, int workers,
                             std::span<const double> deltas);

// Default dyadic scale ladder 2^-j, j = 3 .. floor(log2 T) - 3; the top and
// bottom three octaves are dropped as finite-size / grid-resolution
// contaminated.
std::vector<double> default_scales(std::size_t t_steps);

}  // namespace ifbm::burgers
