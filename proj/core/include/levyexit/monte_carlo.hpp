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

#include <cstdint>
#include <limits>

#include "levyexit/levy_coefficients.hpp"
#include "levyexit/problem.hpp"

namespace levyexit {

/// xoshiro256** with state seeded from (seed, stream) through splitmix64, so
/// every path owns an independent, reproducible stream.
class PathRng {
 public:
  using result_type = std::uint64_t;

  PathRng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform on the open interval (0, 1).
  double uniform_open();
  double standard_normal();

 private:
  std::uint64_t state_[4];
};

struct McConfig {
  std::uint64_t n_paths = 10000;
  double dt = 1e-3;
  std::uint64_t seed = 1;
  double t_max = 1e3;
  int jobs = 1;  ///< worker threads; results do not depend on it

  void validate() const;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_effective = 0;
  double censored_fraction = 0.0;
  bool warning = false;  ///< censored_fraction above 1%
};

struct McExitEstimate {
  McEstimate met;           ///< over all paths, censored ones at t_max
  McEstimate escape_right;  ///< fraction of exited paths landing in [b, inf)
};

/// One draw from S_alpha(sigma, beta, mu) by the Chambers-Mallows-Stuck
/// transform (separate alpha = 1 branch), matching char_fn.
double sample_stable(const StableParams& params, PathRng& rng);

/// Noise increment over dt: sqrt(d dt) N(0,1) plus the Levy part with
/// generator eps * (stable generator), i.e. L_{eps dt}. For alpha = 1 the
/// law of L_c is c xi + c beta (2/pi) ln c with xi ~ S_1(1, beta, 0).
double increment(const ProblemSpec& spec, double dt, PathRng& rng);

/// Euler-Maruyama paths from x0 until |X| >= b or t_max.
McExitEstimate estimate_exit(const ProblemSpec& spec, double x0, const McConfig& config);

}  // namespace levyexit
