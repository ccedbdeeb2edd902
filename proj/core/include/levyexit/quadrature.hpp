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

#include <functional>

namespace levyexit {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Subdivides the interval with the largest error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol * |I|) or max_intervals is hit.
/// The integrand is never evaluated at a or b, so integrable endpoint
/// singularities are tolerated (slowly).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-12,
                           int max_intervals = 2000);

}  // namespace levyexit
