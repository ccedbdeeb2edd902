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

#include "levyexit/exit_solver.hpp"

namespace levyexit {

enum class ReferenceKind { analytic, manufactured, self_J };

std::string to_string(ReferenceKind kind);

struct ConvergenceReport {
  std::vector<int> J_list;
  double probe_x = 0.0;
  std::vector<double> errors;
  std::vector<double> observed_orders;  ///< log2(e_J / e_2J), one shorter than errors
  ReferenceKind reference = ReferenceKind::manufactured;
};

/// p_i = log2(e_i / e_{i+1}). Throws std::invalid_argument for fewer than two
/// errors or any nonpositive error.
std::vector<double> observed_order(const std::vector<double>& errors);

/// Solves with the right-hand side of u = (1 - x^2)_+ (b = 1, d = 0,
/// eps = 1, f = 0) and reports |V - u| at probe_x for each J.
ConvergenceReport manufactured_study(double alpha, double beta, const std::vector<int>& J_list,
                                     double probe_x, const SolverOptions& options = {});

/// Uses the J_ref solution as the reference at probe_x. Requires
/// J_ref >= 8 max(J_list) and probe_x on every grid.
ConvergenceReport self_convergence_study(const ProblemSpec& spec, const std::vector<int>& J_list, int J_ref,
                                         double probe_x, const SolverOptions& options = {});

/// Grid index j with b * j / J == probe_x; throws when probe_x is not a node.
int probe_index(double probe_x, double b, int J);

}  // namespace levyexit
