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

namespace levyexit {

/// Gamma function for real x > 0. Lanczos approximation with the
/// reflection-free recurrence Gamma(x) = Gamma(x + 1) / x below 1/2.
/// Throws std::domain_error for x <= 0.
double gamma_real(double x);

/// Riemann zeta for real x != 1, through the alternating eta series
/// accelerated with Borwein's Euler-type weights:
/// zeta(x) = eta(x) / (1 - 2^{1-x}).
/// Throws std::domain_error at the pole x == 1.
double zeta_real(double x);

}  // namespace levyexit
