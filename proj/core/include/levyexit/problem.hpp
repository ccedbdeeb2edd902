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

#include <string>

#include "levyexit/drift.hpp"
#include "levyexit/levy_coefficients.hpp"

namespace levyexit {

enum class ProblemKind {
  met,          ///< mean first exit time from (-b, b)
  escape_right  ///< probability of first landing in [b, inf)
};

std::string to_string(ProblemKind kind);
ProblemKind parse_problem_kind(const std::string& text);

/// dX = f(X) dt + sqrt(d) dB + (Levy part with intensity eps), D = (-b, b).
struct ProblemSpec {
  StableParams stable;  // sigma = 1, mu = 0 for exit problems
  double d = 0.0;
  double eps = 1.0;
  double b = 1.0;
  DriftSpec drift;
  ProblemKind kind = ProblemKind::met;

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

}  // namespace levyexit
