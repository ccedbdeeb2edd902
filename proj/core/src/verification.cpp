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

#include "levyexit/verification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "levyexit/discretization.hpp"

namespace levyexit {

std::string to_string(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::analytic:
      return "analytic";
    case ReferenceKind::manufactured:
      return "manufactured";
    case ReferenceKind::self_J:
      return "self-J";
  }
  return "unknown";
}

std::vector<double> observed_order(const std::vector<double>& errors) {
  if (errors.size() < 2) {
    throw std::invalid_argument("observed_order: need at least two errors");
  }
  for (double e : errors) {
    if (!(e > 0.0)) {
      throw std::invalid_argument("observed_order: errors must be positive");
    }
  }
  std::vector<double> orders;
  orders.reserve(errors.size() - 1);
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    orders.push_back(std::log2(errors[i] / errors[i + 1]));
  }
  return orders;
}

int probe_index(double probe_x, double b, int J) {
  const double scaled = probe_x / b * J;
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9 || std::abs(rounded) >= J) {
    throw std::invalid_argument("probe point is not an interior node of the J = " + std::to_string(J) + " grid");
  }
  return static_cast<int>(rounded);
}

ConvergenceReport manufactured_study(double alpha, double beta, const std::vector<int>& J_list,
                                     double probe_x, const SolverOptions& options) {
  ProblemSpec spec;
  spec.stable.alpha = alpha;
  spec.stable.beta = beta;
  spec.d = 0.0;
  spec.eps = 1.0;
  spec.b = 1.0;

  ConvergenceReport report;
  report.J_list = J_list;
  report.probe_x = probe_x;
  report.reference = ReferenceKind::manufactured;
  for (int J : J_list) {
    const int j = probe_index(probe_x, spec.b, J);
    const Grid grid(J);
    const SolutionProfile profile = solve_with_rhs(spec, J, manufactured_rhs(spec, grid), options);
    report.errors.push_back(std::abs(profile.at(j) - manufactured_solution(grid.node(j))));
  }
  if (report.errors.size() >= 2) {
    report.observed_orders = observed_order(report.errors);
  }
  return report;
}

ConvergenceReport self_convergence_study(const ProblemSpec& spec, const std::vector<int>& J_list, int J_ref,
                                         double probe_x, const SolverOptions& options) {
  if (J_list.empty()) {
    throw std::invalid_argument("self_convergence_study: J_list is empty");
  }
  if (J_ref < 8 * *std::max_element(J_list.begin(), J_list.end())) {
    throw std::invalid_argument("self_convergence_study: J_ref must be at least 8 max(J_list)");
  }
  const SolutionProfile reference = solve(spec, J_ref, options);
  const double ref_value = reference.at(probe_index(probe_x, spec.b, J_ref));

  ConvergenceReport report;
  report.J_list = J_list;
  report.probe_x = probe_x;
  report.reference = ReferenceKind::self_J;
  for (int J : J_list) {
    const int j = probe_index(probe_x, spec.b, J);
    const SolutionProfile profile = solve(spec, J, options);
    report.errors.push_back(std::abs(profile.at(j) - ref_value));
  }
  if (report.errors.size() >= 2) {
    report.observed_orders = observed_order(report.errors);
  }
  return report;
}

}  // namespace levyexit
