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

#include "levyexit/discretization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

#include "levyexit/parallel.hpp"
#include "levyexit/special_functions.hpp"

namespace levyexit {

namespace {

// (y^{1-alpha} - 1) / (1 - alpha), continuous through alpha = 1 (-> ln y).
double shifted_power_ratio(double y, double alpha) {
  const double log_y = std::log(y);
  if (is_alpha_one(alpha)) {
    return log_y;
  }
  return std::expm1((1.0 - alpha) * log_y) / (1.0 - alpha);
}

// Trapezoid weights on one side of node j. The side reaches the exterior
// after `span` steps; the compensated part covers distances 1..min(span, J)
// (top halved), the uncompensated part J..span with both ends halved.
struct SideWeights {
  int span;
  int J;

  int compensated_top() const { return std::min(span, J); }

  double compensated(int m) const {
    const int top = compensated_top();
    if (m < top) {
      return 1.0;
    }
    return m == top ? 0.5 : 0.0;
  }

  double uncompensated(int m) const {
    if (span <= J || m < J) {
      return 0.0;
    }
    return (m == J || m == span) ? 0.5 : 1.0;
  }
};

struct AssemblyContext {
  const ProblemSpec& spec;
  const Grid& grid;
  LevyCoefficients coeffs;
  double jump_scale = 0.0;  // eps b^{-alpha}
  double ch = 0.0;
  bool one_sided = false;
  std::vector<double> kernel;      // (m h)^{-1-alpha}, m = 0..2J
  std::vector<double> kernel_lin;  // (m h)^{-alpha}
};

// Adds one side's quadrature weights for V_k to the row and returns
// (sum of weights on V_j, sum of compensated weights on the derivative).
// `row` spans all 2J + 1 nodes, exterior ones included.
std::pair<double, double> add_side(const AssemblyContext& ctx, std::span<double> row, int j, int direction,
                                   double side_weight) {
  const int J = ctx.grid.J();
  const SideWeights weights{direction > 0 ? J - j : J + j, J};
  const double prefactor = ctx.jump_scale * ctx.grid.h() * side_weight;
  double value_sum = 0.0;
  double slope_sum = 0.0;
  for (int m = 1; m <= weights.span; ++m) {
    const double wc = weights.compensated(m);
    const double w = wc + weights.uncompensated(m);
    const auto mi = static_cast<std::size_t>(m);
    value_sum += w * ctx.kernel[mi];
    slope_sum += wc * ctx.kernel_lin[mi];
    row[static_cast<std::size_t>(j + direction * m + J)] += prefactor * w * ctx.kernel[mi];
  }
  return {value_sum, slope_sum};
}

void assemble_row(const AssemblyContext& ctx, std::span<double> row, int j) {
  const Grid& grid = ctx.grid;
  const int J = grid.J();
  const double alpha = ctx.spec.stable.alpha;
  const double s = grid.node(j);
  const double b = ctx.spec.b;
  const double c1 = ctx.coeffs.c1;
  const double c2 = ctx.coeffs.c2;

  double right_value = 0.0, right_slope = 0.0, left_value = 0.0, left_slope = 0.0;
  if (ctx.jump_scale > 0.0) {
    std::tie(right_value, right_slope) = add_side(ctx, row, j, +1, c1);
    std::tie(left_value, left_slope) = add_side(ctx, row, j, -1, c2);
  }
  const double quad_prefactor = ctx.jump_scale * grid.h();

  // Coefficient multiplying the discrete derivative at s_j.
  const double drift = effective_drift(b * s, ctx.spec.drift, ctx.coeffs, alpha, ctx.spec.eps, b) / b;
  double transport = drift;
  if (ctx.jump_scale > 0.0) {
    const double g = boundary_drift_g(s, alpha);
    transport = j >= 0 ? drift - ctx.jump_scale * c1 * g : drift + ctx.jump_scale * c2 * g;
  }
  const double compensation = -quad_prefactor * (c1 * right_slope - c2 * left_slope);

  const double inv_h2 = static_cast<double>(J) * static_cast<double>(J);
  const double killing =
      ctx.jump_scale > 0.0
          ? ctx.jump_scale / alpha * (c1 * std::pow(1.0 - s, -alpha) + c2 * std::pow(1.0 + s, -alpha))
          : 0.0;
  const auto diag = static_cast<std::size_t>(j + J);
  row[diag] = (-2.0 * ctx.ch * inv_h2 - killing) - quad_prefactor * (c1 * right_value + c2 * left_value);
  row[diag + 1] += ctx.ch * inv_h2;
  row[diag - 1] += ctx.ch * inv_h2;

  const double inv_h = static_cast<double>(J);
  const double slope = transport + compensation;
  if (ctx.one_sided && j == J - 1) {
    row[diag] += slope * inv_h;
    row[diag - 1] -= slope * inv_h;
  } else if (ctx.one_sided && j == -J + 1) {
    row[diag + 1] += slope * inv_h;
    row[diag] -= slope * inv_h;
  } else {
    row[diag + 1] += slope * 0.5 * inv_h;
    row[diag - 1] -= slope * 0.5 * inv_h;
  }
}

}  // namespace

Grid::Grid(int J) : J_(J) {
  if (J < 2) {
    throw std::invalid_argument("grid: J must be at least 2, got " + std::to_string(J));
  }
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out;
  out.reserve(node_count());
  for (int j = -J_; j <= J_; ++j) {
    out.push_back(node(j));
  }
  return out;
}

double correction_coefficient(const ProblemSpec& spec, const Grid& grid) {
  const double alpha = spec.stable.alpha;
  const double b = spec.b;
  double ch = spec.d / (2.0 * b * b);
  if (spec.eps > 0.0) {
    ch -= spec.eps * std::pow(b, -alpha) * c_alpha(alpha) * zeta_real(alpha - 1.0) *
          std::pow(grid.h(), 2.0 - alpha) / 2.0;
  }
  return ch;
}

AssembledOperator assemble_full(const ProblemSpec& spec, const Grid& grid, int jobs) {
  spec.validate();
  const int J = grid.J();
  const double alpha = spec.stable.alpha;

  AssemblyContext ctx{spec, grid, jump_coefficients(spec.stable), 0.0, 0.0, false, {}, {}};
  ctx.jump_scale = spec.eps * std::pow(spec.b, -alpha);
  ctx.ch = correction_coefficient(spec, grid);
  ctx.one_sided = spec.eps > 0.0 && alpha <= 1.0;
  ctx.kernel.assign(static_cast<std::size_t>(2 * J + 1), 0.0);
  ctx.kernel_lin.assign(static_cast<std::size_t>(2 * J + 1), 0.0);
  for (int m = 1; m <= 2 * J; ++m) {
    const double r = static_cast<double>(m) / J;
    ctx.kernel[static_cast<std::size_t>(m)] = std::pow(r, -1.0 - alpha);
    ctx.kernel_lin[static_cast<std::size_t>(m)] = std::pow(r, -alpha);
  }

  const std::size_t n = grid.unknowns();
  AssembledOperator out{DenseMatrix(n, n), std::vector<double>(n), std::vector<double>(n)};
  parallel_for(n, jobs, [&](std::size_t i) {
    std::vector<double> full(grid.node_count(), 0.0);
    assemble_row(ctx, full, static_cast<int>(i) - J + 1);
    std::copy(full.begin() + 1, full.end() - 1, out.matrix.row(i).begin());
    out.left_exterior[i] = full.front();
    out.right_exterior[i] = full.back();
  });
  return out;
}

DenseMatrix assemble_operator(const ProblemSpec& spec, const Grid& grid, int jobs) {
  return assemble_full(spec, grid, jobs).matrix;
}

std::vector<double> met_rhs(const Grid& grid) { return std::vector<double>(grid.unknowns(), -1.0); }

std::vector<double> escape_rhs(const ProblemSpec& spec, const Grid& grid) {
  return escape_rhs(spec, grid, assemble_full(spec, grid).right_exterior);
}

std::vector<double> escape_rhs(const ProblemSpec& spec, const Grid& grid, std::span<const double> right_exterior) {
  if (spec.kind != ProblemKind::escape_right) {
    throw std::invalid_argument("escape_rhs: problem kind must be escape_right");
  }
  spec.validate();
  if (right_exterior.size() != grid.unknowns()) {
    throw std::invalid_argument("escape_rhs: exterior coupling must have length 2J - 1");
  }
  const double alpha = spec.stable.alpha;
  const LevyCoefficients coeffs = jump_coefficients(spec.stable);
  const double scale = spec.eps * std::pow(spec.b, -alpha) * coeffs.c1 / alpha;
  std::vector<double> rhs(grid.unknowns());
  for (int j = -grid.J() + 1; j < grid.J(); ++j) {
    const std::size_t i = grid.index_of(j);
    // jumps past s = 1, then the terms that reference V_J = 1
    rhs[i] = -scale * std::pow(1.0 - grid.node(j), -alpha) - right_exterior[i];
  }
  return rhs;
}

double manufactured_jump_integral(double x, const LevyCoefficients& coeffs, double alpha) {
  if (!(std::abs(x) < 1.0)) {
    throw std::domain_error("manufactured_jump_integral: |x| must be below 1");
  }
  if (is_alpha_one(alpha)) {
    return -2.0 * (coeffs.c1 + coeffs.c2) - 2.0 * x * (coeffs.c1 * std::log1p(-x) - coeffs.c2 * std::log1p(x));
  }
  const double right = 1.0 - x;
  const double left = 1.0 + x;
  const double right_part = -std::pow(right, 2.0 - alpha) / (2.0 - alpha) -
                            2.0 * x * shifted_power_ratio(right, alpha) -
                            left * std::pow(right, 1.0 - alpha) / alpha;
  const double left_part = -std::pow(left, 2.0 - alpha) / (2.0 - alpha) +
                           2.0 * x * shifted_power_ratio(left, alpha) -
                           right * std::pow(left, 1.0 - alpha) / alpha;
  return coeffs.c1 * right_part + coeffs.c2 * left_part;
}

std::vector<double> manufactured_rhs(const ProblemSpec& spec, const Grid& grid) {
  spec.validate();
  if (spec.b != 1.0 || spec.d != 0.0 || spec.eps != 1.0 || spec.drift.kind() != DriftSpec::Kind::zero) {
    throw std::invalid_argument("manufactured_rhs: requires b = 1, d = 0, eps = 1 and zero drift");
  }
  const double alpha = spec.stable.alpha;
  const LevyCoefficients coeffs = jump_coefficients(spec.stable);
  std::vector<double> rhs(grid.unknowns());
  for (int j = -grid.J() + 1; j < grid.J(); ++j) {
    const double x = grid.node(j);
    // with b = 1 the effective drift is the compensator constant alone
    rhs[grid.index_of(j)] = manufactured_jump_integral(x, coeffs, alpha) + coeffs.k_ab * (-2.0 * x);
  }
  return rhs;
}

DenseSystem assemble_system(const ProblemSpec& spec, const Grid& grid, int jobs) {
  AssembledOperator op = assemble_full(spec, grid, jobs);
  std::vector<double> rhs =
      spec.kind == ProblemKind::met ? met_rhs(grid) : escape_rhs(spec, grid, op.right_exterior);
  return {std::move(op.matrix), std::move(rhs)};
}

}  // namespace levyexit
