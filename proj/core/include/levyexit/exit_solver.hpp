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

#include <vector>

#include "levyexit/discretization.hpp"
#include "levyexit/linalg.hpp"
#include "levyexit/problem.hpp"

namespace levyexit {

struct SolverOptions {
  SolveMethod method = SolveMethod::gmres;
  GmresOptions gmres;
  /// Retry with direct elimination when GMRES does not converge.
  bool direct_fallback = true;
  /// Threads for assembly and matrix-vector products.
  int jobs = 1;
};

/// Nodal solution u(x_j), x_j = b s_j for j = -J..J.
///
/// Boundary entries follow the exterior data: u(+-b) = 0 for the exit time;
/// for escape_right p(-b) = 0 and p(+b) = 1 (P = 1 on [b, inf)). The values
/// at the nodes next to the boundary are kept separately so a jump at the
/// boundary stays visible.
struct SolutionProfile {
  std::vector<double> x_nodes;
  std::vector<double> values;
  double left_interior_limit = 0.0;   ///< value at x_{-J+1}
  double right_interior_limit = 0.0;  ///< value at x_{J-1}
  SolveStats stats;
  ProblemSpec spec;
  int J = 0;

  /// Value at grid index j in -J..J.
  double at(int j) const { return values[static_cast<std::size_t>(j + J)]; }
};

/// Solves the linear system with the configured method and fallback.
SolveResult solve_system(const DenseSystem& system, const SolverOptions& options = {});

/// Assemble, solve and map v(s) back to u(x) = v(x / b).
SolutionProfile solve(const ProblemSpec& spec, int J, const SolverOptions& options = {});

/// Same as solve() but with a caller-supplied right-hand side (length 2J - 1).
SolutionProfile solve_with_rhs(const ProblemSpec& spec, int J, const std::vector<double>& rhs,
                               const SolverOptions& options = {});

/// Exit time for beta = 0, f = 0, d = 0:
/// (b^alpha / eps) sqrt(pi) / (2^alpha Gamma(1 + alpha/2) Gamma((1 + alpha)/2)) (1 - (x/b)^2)^{alpha/2}.
double analytic_met_symmetric(double alpha, double x, double b, double eps);

/// Probability of first landing in [b, inf) for beta = 0, f = 0, d = 0:
/// (2b)^{1-alpha} Gamma(alpha) / Gamma(alpha/2)^2 int_{-b}^x (b^2 - y^2)^{alpha/2 - 1} dy.
double analytic_escape_symmetric(double alpha, double x, double b);

/// max_j |u_{-beta}(-x_j) - u_beta(x_j)| over interior nodes. Requires odd drift.
double symmetry_check(const ProblemSpec& spec, int J, const SolverOptions& options = {});

}  // namespace levyexit
