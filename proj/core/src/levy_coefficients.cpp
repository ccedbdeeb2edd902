// Copyright 2026 The levyexit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "levyexit/levy_coefficients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "levyexit/quadrature.hpp"
#include "levyexit/special_functions.hpp"

namespace levyexit {

namespace {

constexpr double kPi = std::numbers::pi;

// (sin x - x) / x^2 without cancellation near zero.
double sin_minus_x_over_x2(double x) {
  if (std::abs(x) < 0.1) {
    const double x2 = x * x;
    return -x / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0 * (1.0 - x2 / 110.0))));
  }
  return (std::sin(x) - x) / (x * x);
}

double compute_compensator_integral() {
  // Head: int_0^1 (sin x - x)/x^2, smooth after the series fix.
  const double head = integrate(sin_minus_x_over_x2, 0.0, 1.0, 1e-15, 1e-15).value;

  // Oscillatory part: period-by-period on [1, N] with N = 2 pi M, then the
  // asymptotic expansion of the tail from repeated integration by parts:
  // int_N^inf sin x / x^2 = cos N/N^2 + 2 sin N/N^3 - 6 cos N/N^4 - 24 sin N/N^5 + 120 cos N/N^6 ...
  constexpr int kPeriods = 200;
  const auto integrand = [](double x) { return std::sin(x) / (x * x); };
  double body = integrate(integrand, 1.0, 2.0 * kPi, 1e-15, 1e-15).value;
  for (int k = 1; k < kPeriods; ++k) {
    const double lo = 2.0 * kPi * k;
    const double hi = 2.0 * kPi * (k + 1);
    body += integrate(integrand, lo, hi, 1e-16, 1e-14).value;
  }
  const double n = 2.0 * kPi * kPeriods;
  const double c = std::cos(n);
  const double s = std::sin(n);
  const double n2 = n * n;
  const double tail = c / n2 + 2.0 * s / (n2 * n) - 6.0 * c / (n2 * n2) - 24.0 * s / (n2 * n2 * n) +
                      120.0 * c / (n2 * n2 * n2);
  return head + body + tail;
}

}  // namespace

void StableParams::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::invalid_argument("stable: alpha must lie in (0, 2), got " + std::to_string(alpha));
  }
  if (!(beta >= -1.0 && beta <= 1.0)) {
    throw std::invalid_argument("stable: beta must lie in [-1, 1], got " + std::to_string(beta));
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("stable: sigma must be nonnegative, got " + std::to_string(sigma));
  }
  if (!std::isfinite(mu)) {
    throw std::invalid_argument("stable: mu must be finite");
  }
}

double c_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::domain_error("c_alpha: alpha must lie in (0, 2), got " + std::to_string(alpha));
  }
  if (is_alpha_one(alpha)) {
    return 2.0 / kPi;
  }
  return alpha * (1.0 - alpha) / (gamma_real(2.0 - alpha) * std::cos(kPi * alpha / 2.0));
}

double alpha_one_compensator_integral() {
  static const double value = compute_compensator_integral();
  return value;
}

LevyCoefficients jump_coefficients(const StableParams& params) {
  params.validate();
  LevyCoefficients out;
  out.c_alpha = c_alpha(params.alpha);
  out.c1 = out.c_alpha * (1.0 + params.beta) / 2.0;
  out.c2 = out.c_alpha * (1.0 - params.beta) / 2.0;
  if (is_alpha_one(params.alpha)) {
    out.k_ab = alpha_one_compensator_integral() * (out.c2 - out.c1);
  } else {
    out.k_ab = (out.c1 - out.c2) / (1.0 - params.alpha);
  }
  return out;
}

double effective_drift(double x, const DriftSpec& drift, const LevyCoefficients& coeffs,
                       double alpha, double eps, double b) {
  if (!(b > 0.0)) {
    throw std::invalid_argument("effective_drift: b must be positive");
  }
  // (b^{1-alpha} - 1)/(1 - alpha) -> ln b as alpha -> 1
  const double log_b = std::log(b);
  const double cutoff_shift =
      is_alpha_one(alpha) ? log_b : std::expm1((1.0 - alpha) * log_b) / (1.0 - alpha);
  return drift(x) + eps * coeffs.k_ab + eps * (coeffs.c1 - coeffs.c2) * cutoff_shift;
}

double effective_drift(double x, const DriftSpec& drift, const StableParams& params, double eps,
                       double b) {
  return effective_drift(x, drift, jump_coefficients(params), params.alpha, eps, b);
}

double boundary_drift_g(double s, double alpha) {
  const double a = std::abs(s);
  if (!(a < 1.0)) {
    throw std::domain_error("boundary_drift_g: |s| must be below 1");
  }
  const double log_gap = std::log1p(-a);
  if (is_alpha_one(alpha)) {
    return -log_gap;
  }
  return -std::expm1((1.0 - alpha) * log_gap) / (1.0 - alpha);
}

std::complex<double> char_fn(double lambda, double t, const StableParams& params) {
  if (lambda == 0.0) {
    return {1.0, 0.0};
  }
  const double abs_l = std::abs(lambda);
  const double sgn = lambda > 0.0 ? 1.0 : -1.0;
  std::complex<double> exponent;
  if (is_alpha_one(params.alpha)) {
    const double scale = params.sigma * abs_l * t;
    exponent = {-scale, -scale * params.beta * (2.0 / kPi) * sgn * std::log(abs_l)};
  } else {
    const double scale = std::pow(params.sigma * abs_l, params.alpha) * t;
    exponent = {-scale, scale * params.beta * sgn * std::tan(kPi * params.alpha / 2.0)};
  }
  exponent += std::complex<double>(0.0, params.mu * lambda * t);
  return std::exp(exponent);
}

}  // namespace levyexit
