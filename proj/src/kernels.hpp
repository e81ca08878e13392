// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form covariance kernels of integrated fractional Brownian motion
// (IFBM) and of its stationary second-increment sequence. Everything else in
// the library, and every test oracle, derives its expectations from the
// functions in this header.

#pragma once

#include <cstdint>
#include <vector>

namespace ifbm {

// Similarity parameter H of the underlying fractional Brownian motion,
// together with the derived exponent q = 2H + 2 and the normalization
// c_q = 1 / (2 q (q - 1)). The derived members are always recomputed from H.
struct HurstParams {
  double hurst;
  double q;
  double c_q;

  explicit HurstParams(double h);
};

namespace kernels {

// Autocovariance mu_k of the second increments
//   eta_k = y(k-1) - 2 y(k) + y(k+1)
// of IFBM on the integer grid:
//   mu_k = c_q [ |k-2|^q - 4|k-1|^q + 6|k|^q - 4|k+1|^q + |k+2|^q ].
// Even in k. Large lags are evaluated by a binomial series in 1/|k|; the
// direct five-term form loses all significant digits there and the resulting
// noise can destroy positive definiteness of the Toeplitz matrix.
double mu(const HurstParams& p, std::int64_t lag);

// First `count` lags mu_0 .. mu_{count-1}.
std::vector<double> mu_sequence(const HurstParams& p, std::size_t count);

// Cross-covariances m_k = E y(1) eta_k for k = 1 .. t_steps-1:
//   m_k = c_q * D2[ q|k|^{q-1} - |k|^q + |k-1|^q ],
// where D2 f(k) = f(k-1) - 2 f(k) + f(k+1).
std::vector<double> m_vec(const HurstParams& p, std::size_t t_steps);

// Cross-covariances m'_k = E y'(k0) eta_k for k = 1 .. t_steps-1:
//   m'_k = q c_q * D2[ |k|^{q-1} + |k0-k|^{q-1} sgn(k0-k) ],  sgn(0) = 0.
std::vector<double> m_prime_vec(const HurstParams& p, std::size_t t_steps, std::int64_t pivot);

// IFBM covariance gamma(t, s) = E y(t) y(s) for arbitrary real arguments.
// For t, s >= 0:
//   (s t^{q-1} + t s^{q-1}) / (2(q-1)) - c_q (t^q + s^q - |t-s|^q),
// for t = -a < 0 < s:
//   -(s a^{q-1} + a s^{q-1}) / (2(q-1)) + c_q ((a+s)^q - a^q - s^q),
// and gamma(-t, -s) = gamma(t, s). In particular gamma(t, t) = |t|^q / q.
double gamma_cov(const HurstParams& p, double t, double s);

// E y(1) y'(k0) = c_q q [ (q-1) k0^{q-2} + 1 - k0^{q-1} + (k0-1)^{q-1} ],
// the slope covariance used by the bilateral conditioning step.
double y1_slope_cov(const HurstParams& p, std::int64_t pivot);

}  // namespace kernels
}  // namespace ifbm
