// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Self-check routines shared by the test suites and the CLI verify command.

#pragma once

#include <cstdint>

#include "generator.hpp"

namespace ifbm::verify {

// Builds the noise -> path linear map column by column and returns
// max |(M M^T)_{jk} - gamma(j, k)| over all grid pairs. The generator is
// exact, so this is rounding-level (<< 1e-8) whenever the plan is healthy.
double map_exactness_error(const GenPlan& plan);

// Empirical covariance over n sampled paths versus the gamma kernel, as the
// worst entrywise |error| / MonteCarloSE. Values around or below 4 are
// consistent with exact generation.
double covariance_mc_worst_z(const GenPlan& plan, std::size_t n, std::uint64_t master_seed,
                             int workers);

// max |(L L^T)_{ij} - mu_{|i-j|}| for the innovations sampling map of the
// second-increment model at the given order.
double toeplitz_factor_error(const HurstParams& p, std::size_t order);

// Relative max-norm residual ||A x - b|| / ||b|| of a Levinson solve against
// a pseudorandom right-hand side.
double toeplitz_solve_residual(const HurstParams& p, std::size_t order, std::uint64_t seed);

}  // namespace ifbm::verify
