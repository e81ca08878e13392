// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// extern "C" boundary: translates the C++ core into opaque handles and
// status codes. No exception may escape through here.

#include "ifbm/ifbm.h"

#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "analytic.hpp"
#include "burgers.hpp"
#include "error.hpp"
#include "generator.hpp"
#include "kernels.hpp"
#include "mc.hpp"
#include "pathstats.hpp"
#include "powerlaw.hpp"
#include "verify.hpp"

struct ifbm_plan {
  ifbm::GenPlan plan;
};

namespace {

thread_local std::string t_last_error;

ifbm_status to_status(ifbm::errc code) {
  using ifbm::errc;
  switch (code) {
    case errc::ok: return IFBM_OK;
    case errc::invalid_argument: return IFBM_ERR_INVALID_ARGUMENT;
    case errc::not_positive_definite: return IFBM_ERR_NOT_POSITIVE_DEFINITE;
    case errc::negative_variance: return IFBM_ERR_NEGATIVE_VARIANCE;
    case errc::degenerate_pivot: return IFBM_ERR_DEGENERATE_PIVOT;
    case errc::dimension_mismatch: return IFBM_ERR_DIMENSION_MISMATCH;
    case errc::empty_path: return IFBM_ERR_EMPTY_PATH;
    case errc::too_few_samples: return IFBM_ERR_TOO_FEW_SAMPLES;
    case errc::no_data: return IFBM_ERR_NO_DATA;
    case errc::domain_error: return IFBM_ERR_DOMAIN;
    case errc::out_of_support: return IFBM_ERR_OUT_OF_SUPPORT;
    case errc::io_error: return IFBM_ERR_IO;
  }
  return IFBM_ERR_INTERNAL;
}

template <typename Fn>
ifbm_status guarded(Fn&& fn) {
  try {
    fn();
    return IFBM_OK;
  } catch (const ifbm::Error& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return IFBM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return IFBM_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return IFBM_ERR_INTERNAL;
  }
}

ifbm_status require_c(bool cond, const char* msg) {
  if (cond) return IFBM_OK;
  t_last_error = msg;
  return IFBM_ERR_INVALID_ARGUMENT;
}

ifbm_stats to_c(const ifbm::pathstats::PathStats& s) {
  ifbm_stats out;
  out.max_value = s.max_value;
  out.argmax_pos = s.argmax_pos;
  out.occupation = s.occupation;
  out.last_zero = s.last_zero;
  out.atom = s.atom ? 1 : 0;
  return out;
}

ifbm_fit to_c(const ifbm::powerlaw::PowerLawFit& f) {
  ifbm_fit out;
  out.theta = f.theta;
  out.std_err = f.std_err;
  out.lo = f.lo;
  out.hi = f.hi;
  out.n_window = static_cast<int64_t>(f.n_window);
  out.converged = f.converged ? 1 : 0;
  return out;
}

}  // namespace

extern "C" {

const char* ifbm_version(void) { return "0.1.0"; }

const char* ifbm_status_string(ifbm_status status) {
  switch (status) {
    case IFBM_OK: return "ok";
    case IFBM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case IFBM_ERR_NOT_POSITIVE_DEFINITE: return "matrix not positive definite";
    case IFBM_ERR_NEGATIVE_VARIANCE: return "negative conditional variance";
    case IFBM_ERR_DEGENERATE_PIVOT: return "degenerate pivot";
    case IFBM_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case IFBM_ERR_EMPTY_PATH: return "empty path";
    case IFBM_ERR_TOO_FEW_SAMPLES: return "too few samples";
    case IFBM_ERR_NO_DATA: return "no data";
    case IFBM_ERR_DOMAIN: return "domain error";
    case IFBM_ERR_OUT_OF_SUPPORT: return "out of support";
    case IFBM_ERR_IO: return "i/o error";
    case IFBM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ifbm_last_error(void) { return t_last_error.c_str(); }

double ifbm_mu(double hurst, int64_t lag) {
  try {
    return ifbm::kernels::mu(ifbm::HurstParams(hurst), lag);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return std::numeric_limits<double>::quiet_NaN();
  }
}

double ifbm_gamma_cov(double hurst, double t, double s) {
  try {
    return ifbm::kernels::gamma_cov(ifbm::HurstParams(hurst), t, s);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return std::numeric_limits<double>::quiet_NaN();
  }
}

ifbm_status ifbm_plan_unilateral(double hurst, int64_t steps, ifbm_plan** out) {
  if (auto st = require_c(out != nullptr && steps >= 2, "need out pointer and steps >= 2"))
    return st;
  return guarded([&] {
    *out = new ifbm_plan{ifbm::GenPlan::unilateral(ifbm::HurstParams(hurst),
                                                   static_cast<std::size_t>(steps))};
  });
}

ifbm_status ifbm_plan_bilateral(double hurst, int64_t steps, int64_t pivot, ifbm_plan** out) {
  if (auto st = require_c(out != nullptr && steps >= 2, "need out pointer and steps >= 2"))
    return st;
  return guarded([&] {
    *out = new ifbm_plan{ifbm::GenPlan::bilateral(ifbm::HurstParams(hurst),
                                                  static_cast<std::size_t>(steps), pivot)};
  });
}

void ifbm_plan_free(ifbm_plan* plan) { delete plan; }

int64_t ifbm_plan_points(const ifbm_plan* plan) {
  return plan ? static_cast<int64_t>(plan->plan.points()) : 0;
}

int64_t ifbm_plan_origin(const ifbm_plan* plan) { return plan ? plan->plan.origin() : 0; }

int64_t ifbm_plan_noise_dim(const ifbm_plan* plan) {
  return plan ? static_cast<int64_t>(plan->plan.noise_dim()) : 0;
}

double ifbm_plan_hurst(const ifbm_plan* plan) {
  return plan ? plan->plan.params().hurst : std::numeric_limits<double>::quiet_NaN();
}

double ifbm_plan_sigma(const ifbm_plan* plan) {
  return plan ? plan->plan.sigma() : std::numeric_limits<double>::quiet_NaN();
}

double ifbm_plan_sigma_prime(const ifbm_plan* plan) {
  return plan ? plan->plan.sigma_prime() : std::numeric_limits<double>::quiet_NaN();
}

ifbm_status ifbm_generate(const ifbm_plan* plan, uint64_t master_seed, uint64_t sample_index,
                          double* values) {
  if (auto st = require_c(plan && values, "null plan or output")) return st;
  return guarded([&] {
    const ifbm::IfbmPath path = plan->plan.generate(master_seed, sample_index);
    std::memcpy(values, path.values.data(), path.values.size() * sizeof(double));
  });
}

ifbm_status ifbm_generate_from_noise(const ifbm_plan* plan, const double* noise, double* values) {
  if (auto st = require_c(plan && noise && values, "null plan or buffer")) return st;
  return guarded([&] {
    plan->plan.generate_from_noise(std::span<const double>(noise, plan->plan.noise_dim()),
                                   std::span<double>(values, plan->plan.points()));
  });
}

ifbm_status ifbm_extract_stats(const ifbm_plan* plan, const double* values, ifbm_stats* out) {
  if (auto st = require_c(plan && values && out, "null plan or buffer")) return st;
  return guarded([&] {
    const auto s = ifbm::pathstats::extract(
        plan->plan.params().hurst, plan->plan.origin(),
        std::span<const double>(values, plan->plan.points()));
    *out = to_c(s);
  });
}

ifbm_status ifbm_mc_run(const ifbm_plan* plan, int64_t n, uint64_t master_seed, int32_t workers,
                        ifbm_stats* out) {
  if (auto st = require_c(plan && out && n >= 1, "need plan, output, and n >= 1")) return st;
  return guarded([&] {
    const auto stats = ifbm::mc::run_campaign(plan->plan, static_cast<std::size_t>(n),
                                              master_seed, workers);
    for (std::size_t i = 0; i < stats.size(); ++i) out[i] = to_c(stats[i]);
  });
}

ifbm_status ifbm_persistence_probs(const ifbm_plan* plan, const ifbm_stats* stats, int64_t n,
                                   double t_eval, ifbm_persistence* out) {
  if (auto st = require_c(plan && stats && out && n >= 1, "need plan, stats, output, n >= 1"))
    return st;
  return guarded([&] {
    std::vector<ifbm::pathstats::PathStats> cpp(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cpp.size(); ++i) {
      cpp[i].max_value = stats[i].max_value;
      cpp[i].argmax_pos = stats[i].argmax_pos;
      cpp[i].occupation = stats[i].occupation;
      cpp[i].last_zero = stats[i].last_zero;
      cpp[i].atom = stats[i].atom != 0;
    }
    const double t = static_cast<double>(plan->plan.t_steps());
    const double lo = static_cast<double>(plan->plan.origin()) / t;
    const double hi = lo + 1.0;
    const auto pp = ifbm::pathstats::persistence_probs(cpp, plan->plan.params(), t_eval, lo, hi);
    out->p_max = pp.p_max;
    out->p_argmax = pp.p_argmax;
    out->p_occupation = pp.p_occupation;
    out->p_max_is_lower_bound = pp.p_max_is_lower_bound ? 1 : 0;
  });
}

ifbm_status ifbm_fit_mle(const double* samples, int64_t n, double lo, double hi, ifbm_fit* out) {
  if (auto st = require_c(samples && out && n >= 1, "need samples, output, n >= 1")) return st;
  return guarded([&] {
    *out = to_c(ifbm::powerlaw::mle_theta(
        std::span<const double>(samples, static_cast<std::size_t>(n)), lo, hi));
  });
}

ifbm_status ifbm_fit_slope(const double* samples, int64_t n, double lo, double hi,
                           int32_t n_points, ifbm_fit* out) {
  if (auto st = require_c(samples && out && n >= 1, "need samples, output, n >= 1")) return st;
  return guarded([&] {
    const auto ecdf = ifbm::pathstats::Ecdf::build(
        std::span<const double>(samples, static_cast<std::size_t>(n)));
    *out = to_c(ifbm::powerlaw::slope_theta(ecdf, lo, hi, n_points));
  });
}

ifbm_status ifbm_minorant_vertices(const double* f, int64_t n, int64_t* vertices,
                                   int64_t* count) {
  if (auto st = require_c(f && vertices && count && n >= 2, "need f, buffers, n >= 2")) return st;
  return guarded([&] {
    const auto hull = ifbm::burgers::convex_minorant(
        std::span<const double>(f, static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < hull.vertices.size(); ++i)
      vertices[i] = static_cast<int64_t>(hull.vertices[i]);
    *count = static_cast<int64_t>(hull.vertices.size());
  });
}

ifbm_status ifbm_lagrangian_points(const ifbm_plan* plan, const double* values, double* coords,
                                   int64_t* count) {
  if (auto st = require_c(plan && values && coords && count, "null plan or buffer")) return st;
  return guarded([&] {
    ifbm::IfbmPath path;
    path.hurst = plan->plan.params().hurst;
    path.origin = plan->plan.origin();
    path.values.assign(values, values + plan->plan.points());
    const auto pts = ifbm::burgers::lagrangian_points(path);
    for (std::size_t i = 0; i < pts.size(); ++i) coords[i] = pts[i];
    *count = static_cast<int64_t>(pts.size());
  });
}

ifbm_status ifbm_box_counts(const double* points, int64_t n_points, const double* deltas,
                            int64_t n_scales, int64_t* counts) {
  if (auto st = require_c(points && deltas && counts && n_points >= 1 && n_scales >= 1,
                          "need points, deltas, counts"))
    return st;
  return guarded([&] {
    const auto c = ifbm::burgers::box_counts(
        std::span<const double>(points, static_cast<std::size_t>(n_points)),
        std::span<const double>(deltas, static_cast<std::size_t>(n_scales)));
    for (std::size_t i = 0; i < c.size(); ++i) counts[i] = static_cast<int64_t>(c[i]);
  });
}

ifbm_status ifbm_box_dim(const double* points, int64_t n_points, const double* deltas,
                         int64_t n_scales, double* dim) {
  if (auto st = require_c(points && deltas && dim && n_points >= 1 && n_scales >= 2,
                          "need points, >= 2 deltas, output"))
    return st;
  return guarded([&] {
    const auto fit = ifbm::burgers::box_count_dim(
        std::span<const double>(points, static_cast<std::size_t>(n_points)),
        std::span<const double>(deltas, static_cast<std::size_t>(n_scales)));
    *dim = fit.dim;
  });
}

ifbm_status ifbm_dim_experiment(double hurst, int64_t steps, int64_t n_paths,
                                uint64_t master_seed, int32_t workers, const double* deltas,
                                int64_t n_scales, double* mean_log_counts, double* dim,
                                double* spread) {
  if (auto st = require_c(deltas && dim && spread && steps >= 2 && n_paths >= 1 && n_scales >= 2,
                          "need deltas, outputs, steps >= 2, n_paths >= 1"))
    return st;
  return guarded([&] {
    const auto res = ifbm::burgers::dim_experiment(
        ifbm::HurstParams(hurst), static_cast<std::size_t>(steps),
        static_cast<std::size_t>(n_paths), master_seed, workers,
        std::span<const double>(deltas, static_cast<std::size_t>(n_scales)));
    if (mean_log_counts)
      for (std::size_t i = 0; i < res.mean_log_counts.size(); ++i)
        mean_log_counts[i] = res.mean_log_counts[i];
    *dim = res.dim;
    *spread = res.spread;
  });
}

ifbm_status ifbm_beta_q(double h, double h0, double t, double s, double* out) {
  if (auto st = require_c(out != nullptr, "null output")) return st;
  return guarded([&] { *out = ifbm::analytic::beta_q(ifbm::analytic::TimeChangePair(h0, h), t, s); });
}

ifbm_status ifbm_slepian_gap(double h, double h0, int32_t lattice, double* min_gap) {
  if (auto st = require_c(min_gap != nullptr, "null output")) return st;
  return guarded([&] {
    *min_gap = ifbm::analytic::slepian_gap(ifbm::analytic::TimeChangePair(h0, h), lattice);
  });
}

ifbm_status ifbm_r_terms(double h, double h0, double rho, double* r1, double* r2) {
  if (auto st = require_c(r1 && r2, "null output")) return st;
  return guarded([&] {
    const auto rt = ifbm::analytic::r_terms(ifbm::analytic::TimeChangePair(h0, h), rho);
    *r1 = rt.r1;
    *r2 = rt.r2;
  });
}

ifbm_status ifbm_psi_worst_z(const double* g_samples, int64_t n, int32_t bins, double* worst_z) {
  if (auto st = require_c(g_samples && worst_z && n >= 1, "need samples and output")) return st;
  return guarded([&] {
    *worst_z = ifbm::analytic::psi_inequality_worst_z(
        std::span<const double>(g_samples, static_cast<std::size_t>(n)), bins);
  });
}

ifbm_status ifbm_fbm_argmax(double hurst, int64_t steps, int64_t n, uint64_t master_seed,
                            int32_t workers, double* out) {
  if (auto st = require_c(out && steps >= 2 && n >= 1, "need output, steps >= 2, n >= 1"))
    return st;
  return guarded([&] {
    const auto samples = ifbm::analytic::fbm_argmax_samples(
        ifbm::HurstParams(hurst), static_cast<std::size_t>(steps), static_cast<std::size_t>(n),
        master_seed, workers);
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = samples[i];
  });
}

ifbm_status ifbm_verify_map_exactness(const ifbm_plan* plan, double* max_abs_err) {
  if (auto st = require_c(plan && max_abs_err, "null plan or output")) return st;
  return guarded([&] { *max_abs_err = ifbm::verify::map_exactness_error(plan->plan); });
}

ifbm_status ifbm_verify_cov_mc(const ifbm_plan* plan, int64_t n, uint64_t master_seed,
                               int32_t workers, double* worst_z) {
  if (auto st = require_c(plan && worst_z && n >= 1, "need plan, output, n >= 1")) return st;
  return guarded([&] {
    *worst_z = ifbm::verify::covariance_mc_worst_z(plan->plan, static_cast<std::size_t>(n),
                                                   master_seed, workers);
  });
}

ifbm_status ifbm_verify_toeplitz(double hurst, int64_t order, double* factor_err,
                                 double* solve_residual) {
  if (auto st = require_c(factor_err && solve_residual && order >= 1,
                          "need outputs and order >= 1"))
    return st;
  return guarded([&] {
    const ifbm::HurstParams p(hurst);
    *factor_err = ifbm::verify::toeplitz_factor_error(p, static_cast<std::size_t>(order));
    *solve_residual =
        ifbm::verify::toeplitz_solve_residual(p, static_cast<std::size_t>(order), 12345);
  });
}

}  // extern "C"
