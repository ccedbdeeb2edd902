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

#include <cstddef>
#include <span>
#include <vector>

#include "levyexit/linalg.hpp"
#include "levyexit/problem.hpp"

namespace levyexit {

/// Uniform mesh s_j = j / J, j = -J..J, on the nondimensional domain [-1, 1].
class Grid {
 public:
  /// Throws std::invalid_argument for J < 2.
  explicit Grid(int J);

  int J() const { return J_; }
  double h() const { return 1.0 / J_; }
  /// Exact at the ends and odd in j: node(-j) == -node(j).
  double node(int j) const { return static_cast<double>(j) / J_; }
  std::size_t node_count() const { return static_cast<std::size_t>(2 * J_ + 1); }
  std::size_t unknowns() const { return static_cast<std::size_t>(2 * J_ - 1); }
  /// Row/column of interior unknown j in -J+1..J-1.
  std::size_t index_of(int j) const { return static_cast<std::size_t>(j + J_ - 1); }
  std::vector<double> nodes() const;

 private:
  int J_;
};

inline Grid build_grid(int J) { return Grid(J); }

struct DenseSystem {
  DenseMatrix matrix;
  std::vector<double> rhs;
};

/// Diffusion coefficient of the second difference, including the leading
/// punched-hole trapezoid correction:
/// C_h = d / (2 b^2) - eps b^{-alpha} C_alpha zeta(alpha - 1) h^{2 - alpha} / 2.
double correction_coefficient(const ProblemSpec& spec, const Grid& grid);

/// Dense (2J-1) x (2J-1) operator for the nondimensional generator with the
/// exterior condition V_{-J} = V_J = 0. Row j >= 0 splits the nonlocal term as
///   C1 int_0^{1-s} (compensated) + C2 int_0^1 (compensated) + C2 int_1^{1+s},
/// row j < 0 as the mirror image. Quadrature is the punched-hole trapezoid
/// with halved end terms at the integration limits (never at the hole). The
/// derivative coefficient (drift, boundary transport and quadrature
/// compensation together) uses central differences, except in rows +-(J-1)
/// for alpha <= 1 with eps > 0, where it uses a two-point difference
/// pointing into the domain.
///
/// Entries are accumulated in a fixed order keyed by distance to the node, so
/// for odd drift the matrices for beta and -beta are exact index reversals
/// of each other.
DenseMatrix assemble_operator(const ProblemSpec& spec, const Grid& grid, int jobs = 1);

/// The operator plus the coefficients each row places on the exterior nodes
/// V_{-J} and V_J. They vanish from the system when the exterior data is 0.
struct AssembledOperator {
  DenseMatrix matrix;
  std::vector<double> left_exterior;
  std::vector<double> right_exterior;
};

AssembledOperator assemble_full(const ProblemSpec& spec, const Grid& grid, int jobs = 1);

/// All -1: the mean-exit-time equation L v = -1.
std::vector<double> met_rhs(const Grid& grid);

/// -eps b^{-alpha} (C1 / alpha) (1 - s_j)^{-alpha} for jumps landing beyond b,
/// minus the row's coupling to V_J = 1 (the node s = 1 lies in E = [b, inf)).
std::vector<double> escape_rhs(const ProblemSpec& spec, const Grid& grid);

/// Same, reusing right_exterior from assemble_full.
std::vector<double> escape_rhs(const ProblemSpec& spec, const Grid& grid, std::span<const double> right_exterior);

/// Closed-form value of the jump integral (cutoff |y| < 1) applied to
/// (1 - x^2)_+ at |x| < 1, without the eps factor.
double manufactured_jump_integral(double x, const LevyCoefficients& coeffs, double alpha);

/// Full generator applied to u(x) = (1 - x^2)_+ at the interior nodes:
/// the jump integral plus the compensator drift times u'(x). Requires the
/// verification configuration b = 1, d = 0, eps = 1, f = 0.
std::vector<double> manufactured_rhs(const ProblemSpec& spec, const Grid& grid);

/// u(x) = (1 - x^2)_+
inline double manufactured_solution(double x) { return x > -1.0 && x < 1.0 ? 1.0 - x * x : 0.0; }

/// Matrix and right-hand side for spec.kind.
DenseSystem assemble_system(const ProblemSpec& spec, const Grid& grid, int jobs = 1);

}  // namespace levyexit
