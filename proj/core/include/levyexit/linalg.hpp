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
#include <stdexcept>
#include <string>
#include <vector>

namespace levyexit {

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<const double> data() const { return data_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// y = A x. Rows are independent, so the result does not depend on `jobs`.
std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x, int jobs = 1);

double norm2(std::span<const double> v);

/// ||b - A x||_2 / ||b||_2 (absolute norm when b = 0).
double relative_residual(const DenseMatrix& a, std::span<const double> x, std::span<const double> b,
                         int jobs = 1);

enum class SolveMethod { gmres, direct };

std::string to_string(SolveMethod method);

struct SolveStats {
  int iterations = 0;
  double final_residual = 0.0;  ///< relative 2-norm residual, recomputed from scratch
  bool converged = false;
  SolveMethod method = SolveMethod::gmres;
};

struct GmresOptions {
  double tol = 1e-10;
  int restart = 50;
  int max_iters = 0;  ///< 0 selects 10 * system size
  bool jacobi = false;  ///< right diagonal preconditioning
  int jobs = 1;         ///< threads for matrix-vector products
};

struct SolveResult {
  std::vector<double> x;
  SolveStats stats;
};

/// Thrown when GMRES exhausts max_iters; carries the best iterate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, SolveResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const SolveResult& best() const { return best_; }

 private:
  SolveResult best_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Restarted GMRES(m) from a zero initial guess, modified Gram-Schmidt with
/// Givens rotations. Throws ConvergenceError when the relative residual is
/// still above tol after max_iters inner iterations.
SolveResult gmres_solve(const DenseMatrix& a, std::span<const double> b, const GmresOptions& options = {});

/// Gaussian elimination with partial pivoting. Throws SingularMatrixError on
/// a pivot below n * eps * max|A|.
std::vector<double> direct_solve(const DenseMatrix& a, std::span<const double> b);

}  // namespace levyexit
