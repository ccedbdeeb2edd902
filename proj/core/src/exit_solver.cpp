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

#include "levyexit/exit_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "levyexit/quadrature.hpp"
#include "levyexit/special_functions.hpp"

namespace levyexit {

namespace {

// int_0^u [t (1 - t)]^{a - 1} dt for u <= 1/2. With t = w^{1/a} the endpoint
// singularity at t = 0 disappears: the integrand becomes (1 - w^{1/a})^{a-1} / a.
double lower_incomplete_symmetric_beta(double u, double a) {
  if (u <= 0.0) {
    return 0.0;
  }
  const auto integrand = [a](double w) { return std::pow(1.0 - std::pow(w, 1.0 / a), a - 1.0) / a; };
  return integrate(integrand, 0.0, std::pow(u, a), 1e-14, 1e-13).value;
}

// Regularized I_u(a, a).
double regularized_symmetric_beta(double u, double a) {
  const double complete = std::pow(gamma_real(a), 2) / gamma_real(2.0 * a);
  if (u <= 0.5) {
    return lower_incomplete_symmetric_beta(u, a) / complete;
  }
  return 1.0 - lower_incomplete_symmetric_beta(1.0 - u, a) / complete;
}

SolutionProfile solve_system_profile(const ProblemSpec& spec, const Grid& grid, const DenseSystem& system,
                                     const SolverOptions& options) {
  const int J = grid.J();
  const SolveResult result = solve_system(system, options);

  SolutionProfile profile;
  profile.spec = spec;
  profile.J = J;
  profile.stats = result.stats;
  profile.x_nodes.reserve(grid.node_count());
  profile.values.assign(grid.node_count(), 0.0);
  for (int j = -J; j <= J; ++j) {
    profile.x_nodes.push_back(spec.b * grid.node(j));
  }
  for (int j = -J + 1; j < J; ++j) {
    profile.values[static_cast<std::size_t>(j + J)] = result.x[grid.index_of(j)];
  }
  if (spec.kind == ProblemKind::escape_right) {
    profile.values.back() = 1.0;
  }
  profile.left_interior_limit = profile.at(-J + 1);
  profile.right_interior_limit = profile.at(J - 1);
  return profile;
}

}  // namespace

SolveResult solve_system(const DenseSystem& system, const SolverOptions& options) {
  if (options.method == SolveMethod::direct) {
    SolveResult result;
    result.x = direct_solve(system.matrix, system.rhs);
    const double residual = relative_residual(system.matrix, result.x, system.rhs, options.jobs);
    result.stats = {1, residual, true, SolveMethod::direct};
    return result;
  }
  GmresOptions gmres = options.gmres;
  gmres.jobs = options.jobs;
  try {
    return gmres_solve(system.matrix, system.rhs, gmres);
  } catch (const ConvergenceError&) {
    if (!options.direct_fallback) {
      throw;
    }
  }
  SolveResult result;
  result.x = direct_solve(system.matrix, system.rhs);
  const double residual = relative_residual(system.matrix, result.x, system.rhs, options.jobs);
  result.stats = {1, residual, residual <= options.gmres.tol, SolveMethod::direct};
  return result;
}

SolutionProfile solve_with_rhs(const ProblemSpec& spec, int J, const std::vector<double>& rhs,
                               const SolverOptions& options) {
  spec.validate();
  const Grid grid(J);
  if (rhs.size() != grid.unknowns()) {
    throw std::invalid_argument("solve: right-hand side length must be 2J - 1");
  }
  return solve_system_profile(spec, grid, DenseSystem{assemble_operator(spec, grid, options.jobs), rhs}, options);
}

SolutionProfile solve(const ProblemSpec& spec, int J, const SolverOptions& options) {
  spec.validate();
  const Grid grid(J);
  return solve_system_profile(spec, grid, assemble_system(spec, grid, options.jobs), options);
}

double analytic_met_symmetric(double alpha, double x, double b, double eps) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::domain_error("analytic_met_symmetric: alpha must lie in (0, 2)");
  }
  if (!(b > 0.0) || !(eps > 0.0)) {
    throw std::domain_error("analytic_met_symmetric: b and eps must be positive");
  }
  if (std::abs(x) > b) {
    throw std::domain_error("analytic_met_symmetric: |x| must not exceed b");
  }
  const double s = x / b;
  const double gap = std::max(0.0, 1.0 - s * s);
  const double constant = std::sqrt(std::numbers::pi) /
                          (std::pow(2.0, alpha) * gamma_real(1.0 + alpha / 2.0) * gamma_real((1.0 + alpha) / 2.0));
  return std::pow(b, alpha) / eps * constant * std::pow(gap, alpha / 2.0);
}

double analytic_escape_symmetric(double alpha, double x, double b) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::domain_error("analytic_escape_symmetric: alpha must lie in (0, 2)");
  }
  if (!(b > 0.0)) {
    throw std::domain_error("analytic_escape_symmetric: b must be positive");
  }
  if (std::abs(x) > b) {
    throw std::domain_error("analytic_escape_symmetric: |x| must not exceed b");
  }
  // y = -b + 2b u maps the integral onto the regularized incomplete beta I_u(alpha/2, alpha/2).
  const double u = (x + b) / (2.0 * b);
  return regularized_symmetric_beta(u, alpha / 2.0);
}

double symmetry_check(const ProblemSpec& spec, int J, const SolverOptions& options) {
  if (!spec.drift.is_odd()) {
    throw std::invalid_argument("symmetry_check: drift must be odd");
  }
  if (spec.kind != ProblemKind::met) {
    throw std::invalid_argument("symmetry_check: applies to the mean exit time");
  }
  ProblemSpec mirrored = spec;
  mirrored.stable.beta = -spec.stable.beta;
  const SolutionProfile forward = solve(spec, J, options);
  const SolutionProfile backward = solve(mirrored, J, options);
  double worst = 0.0;
  for (int j = -J + 1; j < J; ++j) {
    worst = std::max(worst, std::abs(backward.at(-j) - forward.at(j)));
  }
  return worst;
}

}  // namespace levyexit
