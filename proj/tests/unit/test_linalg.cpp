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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "levyexit/discretization.hpp"
#include "levyexit/linalg.hpp"

using namespace levyexit;

namespace {

DenseMatrix random_matrix(std::size_t n, double diagonal_boost, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      a(i, k) = dist(gen);
    }
    a(i, i) += diagonal_boost;
  }
  return a;
}

std::vector<double> random_vector(std::size_t n, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) {
    x = dist(gen);
  }
  return v;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("identity system") {
    const auto a = DenseMatrix::identity(5);
    const std::vector<double> b{1, -2, 3, -4, 5};
    const auto r = gmres_solve(a, b);
    CHECK(r.stats.converged);
    CHECK(r.stats.iterations <= 1);
    CHECK(max_diff(r.x, b) < 1e-14);
    CHECK(direct_solve(a, b) == b);
  }

  TEST_CASE("one by one") {
    DenseMatrix a(1, 1, 4.0);
    const std::vector<double> b{2.0};
    CHECK(gmres_solve(a, b).x[0] == doctest::Approx(0.5));
    CHECK(direct_solve(a, b)[0] == doctest::Approx(0.5));
  }

  TEST_CASE("permutation needs pivoting") {
    DenseMatrix a(3, 3);
    a(0, 2) = 1.0;
    a(1, 0) = 2.0;
    a(2, 1) = -1.0;
    const std::vector<double> b{3.0, 4.0, 5.0};
    const auto x = direct_solve(a, b);
    CHECK(x[0] == doctest::Approx(2.0));
    CHECK(x[1] == doctest::Approx(-5.0));
    CHECK(x[2] == doctest::Approx(3.0));
    const auto g = gmres_solve(a, b);
    CHECK(max_diff(g.x, x) < 1e-9);
  }

  TEST_CASE("random systems agree between methods") {
    for (std::uint32_t seed : {1u, 2u, 3u}) {
      const auto a = random_matrix(50, 60.0, seed);
      const auto b = random_vector(50, seed + 100);
      const auto direct = direct_solve(a, b);
      CHECK(relative_residual(a, direct, b) < 1e-13);
      const auto g = gmres_solve(a, b, {.tol = 1e-12, .restart = 10});
      CHECK(g.stats.converged);
      CHECK(g.stats.final_residual <= 1e-12);
      CHECK(max_diff(g.x, direct) < 1e-10);
    }
    const auto hard = random_matrix(50, 0.0, 9);
    const auto b = random_vector(50, 10);
    const auto direct = direct_solve(hard, b);
    CHECK(relative_residual(hard, direct, b) < 1e-10);
    const auto g = gmres_solve(hard, b, {.tol = 1e-11, .restart = 60});
    CHECK(relative_residual(hard, g.x, b) < 1e-10);
  }

  TEST_CASE("jacobi preconditioning gives the same answer") {
    auto a = random_matrix(30, 20.0, 5);
    for (std::size_t i = 0; i < 30; ++i) {
      a(i, i) *= static_cast<double>(i + 1);
    }
    const auto b = random_vector(30, 6);
    const auto plain = gmres_solve(a, b, {.tol = 1e-12});
    const auto scaled = gmres_solve(a, b, {.tol = 1e-12, .jacobi = true});
    CHECK(max_diff(plain.x, scaled.x) < 1e-10);
  }

  TEST_CASE("singular and malformed input") {
    DenseMatrix singular(3, 3, 1.0);
    CHECK_THROWS_AS(direct_solve(singular, std::vector<double>{1, 2, 3}), SingularMatrixError);
    CHECK_THROWS_AS(direct_solve(DenseMatrix(3, 3), std::vector<double>{1, 2, 3}), SingularMatrixError);
    CHECK_THROWS_AS(direct_solve(DenseMatrix(2, 3), std::vector<double>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(gmres_solve(DenseMatrix::identity(2), std::vector<double>{1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(gmres_solve(DenseMatrix::identity(2), std::vector<double>{1, 2}, {.tol = 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(gmres_solve(DenseMatrix::identity(2), std::vector<double>{1, 2}, {.restart = 0}),
                    std::invalid_argument);
  }

  TEST_CASE("iteration cap raises with the best iterate") {
    const auto a = random_matrix(40, 0.0, 11);
    const auto b = random_vector(40, 12);
    try {
      gmres_solve(a, b, {.tol = 1e-14, .restart = 3, .max_iters = 6});
      FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
      CHECK(e.best().x.size() == 40);
      CHECK_FALSE(e.best().stats.converged);
      CHECK(e.best().stats.iterations == 6);
      CHECK(e.best().stats.final_residual <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("zero right-hand side") {
    const auto r = gmres_solve(random_matrix(5, 10.0, 3), std::vector<double>(5, 0.0));
    CHECK(r.stats.converged);
    CHECK(norm2(r.x) == 0.0);
  }

  TEST_CASE("assembled operator converges") {
    ProblemSpec spec;
    spec.stable.alpha = 1.5;
    spec.stable.beta = 0.5;
    const Grid grid(80);
    const DenseSystem system = assemble_system(spec, grid);
    const auto g = gmres_solve(system.matrix, system.rhs, {.tol = 1e-10});
    CHECK(g.stats.converged);
    const auto direct = direct_solve(system.matrix, system.rhs);
    CHECK(max_diff(g.x, direct) < 1e-8);
  }

  TEST_CASE("results do not depend on the thread count") {
    const auto a = random_matrix(64, 40.0, 21);
    const auto b = random_vector(64, 22);
    const auto one = gmres_solve(a, b, {.jobs = 1});
    const auto four = gmres_solve(a, b, {.jobs = 4});
    CHECK(one.x == four.x);
    CHECK(one.stats.iterations == four.stats.iterations);
    CHECK(multiply(a, b, 1) == multiply(a, b, 3));
    CHECK(gmres_solve(a, b).x == one.x);
  }

  TEST_CASE("method names") {
    CHECK(to_string(SolveMethod::gmres) == "gmres");
    CHECK(to_string(SolveMethod::direct) == "direct");
  }
}
