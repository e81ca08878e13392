// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include "kernels.hpp"

#include <cmath>
#include <cstdlib>

#include "error.hpp"

namespace ifbm {

HurstParams::HurstParams(double h) : hurst(h), q(2.0 * h + 2.0), c_q(0.0) {
  require(h > 0.0 && h < 1.0, errc::invalid_argument,
          "similarity parameter must satisfy 0 < H < 1");
  c_q = 1.0 / (2.0 * q * (q - 1.0));
}

namespace kernels {
namespace {

double pow_abs(double x, double e) { return std::pow(std::abs(x), e); }

// sum_{m>=2} C(q, m) (-x)^m  =  (1-x)^q - 1 + q x, as a series. Safe from
// cancellation for |x| <= 1/8; a couple dozen terms reach full precision.
double binom_tail2(double q, double x) {
  double coef = q;   // C(q, 1)
  double xm = -x;    // (-x)^1
  double sum = 0.0;
  for (int m = 2; m < 200; ++m) {
    coef *= (q - m + 1) / m;
    xm *= -x;
    const double term = coef * xm;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// sum over even m >= 4 of (2^{m+1} - 8) C(q, m) x^m
//   =  (1+2x)^q + (1-2x)^q - 4 (1+x)^q - 4 (1-x)^q + 6,
// the fourth central difference of |.|^q expressed around k = 1/x.
double fourth_diff_tail(double q, double x) {
  double coef = 1.0;  // C(q, 0)
  double pow2 = 1.0;  // 2^m
  double xm = 1.0;    // x^m
  double sum = 0.0;
  for (int m = 1; m < 200; ++m) {
    coef *= (q - m + 1) / m;
    pow2 *= 2.0;
    xm *= x;
    if (m >= 4 && m % 2 == 0) {
      const double term = (2.0 * pow2 - 8.0) * coef * xm;
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
  }
  return sum;
}

// q k^{q-1} - k^q + (k-1)^q for integer k >= 0. For large k this equals
// k^q (q/k - 1 + (1-1/k)^q) whose parenthesis is evaluated by series.
double m_bracket(double q, std::int64_t k) {
  if (k == 0) return 1.0;  // |0|^{q-1} -> 0, |0|^q -> 0, |-1|^q -> 1
  const double kd = static_cast<double>(k);
  if (k < 8) return q * std::pow(kd, q - 1.0) - std::pow(kd, q) + std::pow(kd - 1.0, q);
  return std::pow(kd, q) * binom_tail2(q, 1.0 / kd);
}

}  // namespace

double mu(const HurstParams& p, std::int64_t lag) {
  const double q = p.q;
  const std::int64_t a = std::llabs(lag);
  if (a <= 8) {
    const double k = static_cast<double>(a);
    return p.c_q * (pow_abs(k - 2.0, q) - 4.0 * pow_abs(k - 1.0, q) + 6.0 * pow_abs(k, q) -
                    4.0 * pow_abs(k + 1.0, q) + pow_abs(k + 2.0, q));
  }
  const double kd = static_cast<double>(a);
  return p.c_q * std::pow(kd, q) * fourth_diff_tail(q, 1.0 / kd);
}

std::vector<double> mu_sequence(const HurstParams& p, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = mu(p, static_cast<std::int64_t>(k));
  return out;
}

std::vector<double> m_vec(const HurstParams& p, std::size_t t_steps) {
  require(t_steps >= 2, errc::invalid_argument, "grid must have at least two steps");
  std::vector<double> out(t_steps - 1);
  double f_prev = m_bracket(p.q, 0);
  double f_mid = m_bracket(p.q, 1);
  for (std::size_t k = 1; k < t_steps; ++k) {
    const double f_next = m_bracket(p.q, static_cast<std::int64_t>(k) + 1);
    out[k - 1] = p.c_q * (f_prev - 2.0 * f_mid + f_next);
    f_prev = f_mid;
    f_mid = f_next;
  }
  return out;
}

std::vector<double> m_prime_vec(const HurstParams& p, std::size_t t_steps, std::int64_t pivot) {
  require(t_steps >= 2, errc::invalid_argument, "grid must have at least two steps");
  require(pivot >= 1 && pivot <= static_cast<std::int64_t>(t_steps) - 1, errc::invalid_argument,
          "pivot must lie strictly inside the grid");
  const double q = p.q;
  auto g = [&](std::int64_t j) {
    const std::int64_t d = pivot - j;
    const double sgn = d > 0 ? 1.0 : (d < 0 ? -1.0 : 0.0);
    return pow_abs(static_cast<double>(j), q - 1.0) +
           pow_abs(static_cast<double>(d), q - 1.0) * sgn;
  };
  std::vector<double> out(t_steps - 1);
  double g_prev = g(0);
  double g_mid = g(1);
  for (std::size_t k = 1; k < t_steps; ++k) {
    const double g_next = g(static_cast<std::int64_t>(k) + 1);
    out[k - 1] = q * p.c_q * (g_prev - 2.0 * g_mid + g_next);
    g_prev = g_mid;
    g_mid = g_next;
  }
  return out;
}

double gamma_cov(const HurstParams& p, double t, double s) {
  if (t == 0.0 || s == 0.0) return 0.0;
  const double q = p.q;
  if (t < 0.0 && s < 0.0) {
    t = -t;
    s = -s;
  }
  if (t > 0.0 && s > 0.0) {
    return (s * std::pow(t, q - 1.0) + t * std::pow(s, q - 1.0)) / (2.0 * (q - 1.0)) -
           p.c_q * (std::pow(t, q) + std::pow(s, q) - pow_abs(t - s, q));
  }
  const double a = t < 0.0 ? -t : -s;  // magnitude of the negative argument
  const double b = t < 0.0 ? s : t;    // the positive argument
  return -(b * std::pow(a, q - 1.0) + a * std::pow(b, q - 1.0)) / (2.0 * (q - 1.0)) +
         p.c_q * (std::pow(a + b, q) - std::pow(a, q) - std::pow(b, q));
}

double y1_slope_cov(const HurstParams& p, std::int64_t pivot) {
  require(pivot >= 1, errc::invalid_argument, "pivot must be positive");
  const double q = p.q;
  const double k0 = static_cast<double>(pivot);
  return p.c_q * q *
         ((q - 1.0) * std::pow(k0, q - 2.0) + 1.0 - std::pow(k0, q - 1.0) +
          std::pow(k0 - 1.0, q - 1.0));
}

}  // namespace kernels
}  // namespace ifbm
