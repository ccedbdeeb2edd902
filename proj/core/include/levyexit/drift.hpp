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
#include <vector>

namespace levyexit {

/// Deterministic drift f(x) of the SDE.
class DriftSpec {
 public:
  enum class Kind { zero, linear, polynomial };

  DriftSpec() = default;

  static DriftSpec zero() { return {}; }
  /// f(x) = slope * x
  static DriftSpec linear(double slope);
  /// f(x) = c0 + c1 x + c2 x^2 + ..., ascending powers.
  static DriftSpec polynomial(std::vector<double> coefficients);

  /// Parses "zero", "linear:<k>" or "poly:<c0,c1,...>".
  static DriftSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  const std::vector<double>& coefficients() const { return coefficients_; }

  double operator()(double x) const;

  /// True iff every even-power coefficient is zero, i.e. f(-x) = -f(x).
  bool is_odd() const;

  std::string to_string() const;

 private:
  Kind kind_ = Kind::zero;
  std::vector<double> coefficients_;
};

}  // namespace levyexit
