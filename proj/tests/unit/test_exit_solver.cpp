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

#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "levyexit/exit_solver.hpp"

using namespace levyexit;

namespace {

ProblemSpec make_spec(double alpha, double beta, ProblemKind kind = ProblemKind::met) {
  ProblemSpec spec;
  spec.stable.alpha = alpha;
  spec.stable.beta = beta;
  spec.kind = kind;
  return spec;
}

}  // namespace

TEST_SUITE("exit_solver") {
  TEST_CASE("analytic exit time examples") {
    CHECK(analytic_met_symmetric(1.5, 0.0, 1.0, 1.0) == doctest::Approx(0.752252).epsilon(1e-6));
    CHECK(analytic_met_symmetric(1.0, 0.0, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(analytic_met_symmetric(0.5, 0.0, 1.0, 1.0) == doctest::Approx(1.128379).epsilon(1e-6));
    CHECK(analytic_met_symmetric(1.5, 1.0, 1.0, 1.0) == 0.0);
    CHECK(analytic_met_symmetric(1.5, 0.0, 2.0, 0.5) ==
          doctest::Approx(std::pow(2.0, 1.5) / 0.5 * analytic_met_symmetric(1.5, 0.0, 1.0, 1.0)));
    CHECK_THROWS_AS(analytic_met_symmetric(2.0, 0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(analytic_met_symmetric(1.5, 1.5, 1.0, 1.0), std::domain_error);
  }

  TEST_CASE("analytic escape probability matches the incomplete beta function") {
    for (double alpha : {0.3, 0.5, 1.0, 1.5, 1.9}) {
      for (double x : {-0.99, -0.6, -0.1, 0.0, 0.35, 0.8, 1.0}) {
        const double ref = boost::math::ibeta(alpha / 2.0, alpha / 2.0, (x + 1.0) / 2.0);
        CHECK(std::abs(analytic_escape_symmetric(alpha, x, 1.0) - ref) < 1e-12);
      }
      CHECK(analytic_escape_symmetric(alpha, 0.0, 3.0) == doctest::Approx(0.5).epsilon(1e-13));
    }
  }

  TEST_CASE("exit time solve") {
    const auto profile = solve(make_spec(1.5, 0.0), 160);
    CHECK(profile.values.size() == 321);
    CHECK(profile.x_nodes.front() == -1.0);
    CHECK(profile.x_nodes.back() == 1.0);
    CHECK(profile.values.front() == 0.0);
    CHECK(profile.values.back() == 0.0);
    CHECK(profile.stats.converged);
    CHECK(std::abs(profile.at(0) - 0.752252) < 5e-3);
    CHECK(profile.left_interior_limit == profile.at(-159));
    CHECK(profile.right_interior_limit == profile.at(159));
    for (int j = -159; j < 160; ++j) {
      CHECK(profile.at(j) > 0.0);
      CHECK(std::abs(profile.at(j) - profile.at(-j)) < 1e-8);
    }
  }

  TEST_CASE("domain scaling") {
    ProblemSpec wide = make_spec(1.5, 0.0);
    wide.b = 2.0;
    wide.eps = 0.5;
    const auto profile = solve(wide, 80);
    CHECK(profile.x_nodes.back() == 2.0);
    CHECK(std::abs(profile.at(0) - analytic_met_symmetric(1.5, 0.0, 2.0, 0.5)) < 0.1);
  }

  TEST_CASE("escape probability solve") {
    const auto profile = solve(make_spec(1.5, 0.0, ProblemKind::escape_right), 160);
    CHECK(profile.values.front() == 0.0);
    CHECK(profile.values.back() == 1.0);
    CHECK(std::abs(profile.at(0) - 0.5) < 1e-8);
    for (int j = -159; j < 160; ++j) {
      CHECK(profile.at(j) >= -1e-12);
      CHECK(profile.at(j) <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("one-sided jumps match the scale-function exit law") {
    // Without negative jumps and alpha > 1, P(exit above | midpoint) = 1 - 2^{1 - alpha}.
    SolverOptions direct;
    direct.method = SolveMethod::direct;
    for (double alpha : {1.3, 1.5, 1.8}) {
      const double up = 1.0 - std::pow(2.0, 1.0 - alpha);
      const auto positive = solve(make_spec(alpha, 1.0, ProblemKind::escape_right), 160, direct);
      const auto negative = solve(make_spec(alpha, -1.0, ProblemKind::escape_right), 160, direct);
      INFO("alpha = ", alpha);
      CHECK(std::abs(positive.at(0) - up) < 1e-3);
      CHECK(std::abs(negative.at(0) - (1.0 - up)) < 1e-3);
    }
  }

  TEST_CASE("gmres and direct agree") {
    SolverOptions gmres;
    gmres.gmres.tol = 1e-12;
    SolverOptions direct;
    direct.method = SolveMethod::direct;
    const auto a = solve(make_spec(1.2, 0.4), 60, gmres);
    const auto b = solve(make_spec(1.2, 0.4), 60, direct);
    CHECK(b.stats.method == SolveMethod::direct);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    }
    CHECK(worst < 1e-9);
  }

  TEST_CASE("fallback on non-convergence") {
    SolverOptions options;
    options.gmres.tol = 1e-30;
    options.gmres.max_iters = 3;
    const auto fallback = solve(make_spec(1.5, 0.0), 20, options);
    CHECK(fallback.stats.method == SolveMethod::direct);
    options.direct_fallback = false;
    CHECK_THROWS_AS(solve(make_spec(1.5, 0.0), 20, options), ConvergenceError);
  }

  TEST_CASE("symmetry check") {
    ProblemSpec spec = make_spec(0.5, 0.6);
    spec.drift = DriftSpec::linear(-1.0);
    CHECK(symmetry_check(spec, 40) < 1e-10);
    spec.drift = DriftSpec::polynomial({0.5, -1.0});
    CHECK_THROWS_AS(symmetry_check(spec, 40), std::invalid_argument);
    CHECK_THROWS_AS(symmetry_check(make_spec(1.5, 0.2, ProblemKind::escape_right), 40), std::invalid_argument);
  }

  TEST_CASE("invalid input") {
    CHECK_THROWS_AS(solve(make_spec(2.5, 0.0), 20), std::invalid_argument);
    CHECK_THROWS_AS(solve(make_spec(1.5, 0.0), 1), std::invalid_argument);
    CHECK_THROWS_AS(solve_with_rhs(make_spec(1.5, 0.0), 10, std::vector<double>(5, 1.0)), std::invalid_argument);
  }
}
