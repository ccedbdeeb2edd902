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

#include "levyexit/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace levyexit {

std::string to_string(ProblemKind kind) {
  return kind == ProblemKind::met ? "met" : "escape_right";
}

ProblemKind parse_problem_kind(const std::string& text) {
  if (text == "met") {
    return ProblemKind::met;
  }
  if (text == "escape" || text == "escape_right") {
    return ProblemKind::escape_right;
  }
  throw std::invalid_argument("unknown problem kind '" + text + "'");
}

void ProblemSpec::validate() const {
  stable.validate();
  if (stable.sigma != 1.0 || stable.mu != 0.0) {
    throw std::invalid_argument("problem: exit problems use sigma = 1 and mu = 0");
  }
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw std::invalid_argument("problem: d must be nonnegative");
  }
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("problem: eps must be nonnegative");
  }
  if (!(d + eps > 0.0)) {
    throw std::invalid_argument("problem: d + eps must be positive");
  }
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("problem: b must be positive");
  }
  for (double x : {-b, 0.0, b}) {
    if (!std::isfinite(drift(x))) {
      throw std::invalid_argument("problem: drift is not finite on [-b, b]");
    }
  }
}

}  // namespace levyexit
