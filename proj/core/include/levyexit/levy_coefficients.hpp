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

#pragma once

#include <cmath>
#include <complex>

#include "levyexit/drift.hpp"

namespace levyexit {

/// Parameters of the stable law S_alpha(sigma, beta, mu).
struct StableParams {
  double alpha = 1.5;  ///< index of stability, 0 < alpha < 2
  double beta = 0.0;   ///< skewness, -1 <= beta <= 1
  double sigma = 1.0;  ///< scale, >= 0
  double mu = 0.0;     ///< shift

  /// Throws std::invalid_argument when outside the admissible ranges.
  void validate() const;
};

/// Jump-measure weights nu(dy) = (C1 1{y>0} + C2 1{y<0}) / |y|^{1+alpha}
/// and the compensator drift K_{alpha,beta}.
struct LevyCoefficients {
  double c_alpha = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double k_ab = 0.0;
};

/// Inputs this close to alpha = 1 take the alpha = 1 branch.
inline constexpr double kAlphaOneSnap = 1e-12;

inline bool is_alpha_one(double alpha) { return alpha == 1.0 || std::abs(alpha - 1.0) < kAlphaOneSnap; }

/// alpha (1 - alpha) / (Gamma(2 - alpha) cos(pi alpha / 2)), and 2/pi at alpha = 1.
/// Throws std::domain_error unless 0 < alpha < 2.
double c_alpha(double alpha);

/// int_1^inf sin(x)/x^2 dx + int_0^1 (sin(x) - x)/x^2 dx, computed once by
/// adaptive quadrature and cached.
double alpha_one_compensator_integral();

LevyCoefficients jump_coefficients(const StableParams& params);

/// Drift after moving the small-jump cutoff from |y| < 1 to |y| < b:
/// f(x) + eps K + eps (C1 - C2) (b^{1-alpha} - 1) / (1 - alpha), with ln b at alpha = 1.
double effective_drift(double x, const DriftSpec& drift, const StableParams& params, double eps,
                       double b);

/// Overload for callers that already hold the coefficients.
double effective_drift(double x, const DriftSpec& drift, const LevyCoefficients& coeffs,
                       double alpha, double eps, double b);

/// (1 - (1 - |s|)^{1-alpha}) / (1 - alpha), or -ln(1 - |s|) at alpha = 1.
/// Throws std::domain_error for |s| >= 1.
double boundary_drift_g(double s, double alpha);

/// E[exp(i lambda L_t)] for the Levy-Khinchin exponent of S_alpha(sigma, beta, mu).
std::complex<double> char_fn(double lambda, double t, const StableParams& params);

}  // namespace levyexit
