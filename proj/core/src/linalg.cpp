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

#include "levyexit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "levyexit/parallel.hpp"

namespace levyexit {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += a[i] * b[i];
  }
  return acc;
}

void check_system(const DenseMatrix& a, std::span<const double> b, const char* who) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
  if (b.size() != a.rows()) {
    throw std::invalid_argument(std::string(who) + ": right-hand side length mismatch");
  }
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x, int jobs) {
  if (x.size() != a.cols()) {
    throw std::invalid_argument("multiply: dimension mismatch");
  }
  std::vector<double> y(a.rows());
  parallel_for(a.rows(), jobs, [&](std::size_t i) { y[i] = dot(a.row(i), x); });
  return y;
}

double norm2(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double relative_residual(const DenseMatrix& a, std::span<const double> x, std::span<const double> b,
                         int jobs) {
  auto r = multiply(a, x, jobs);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = b[i] - r[i];
  }
  const double bnorm = norm2(b);
  return bnorm > 0.0 ? norm2(r) / bnorm : norm2(r);
}

std::string to_string(SolveMethod method) { return method == SolveMethod::gmres ? "gmres" : "direct"; }

SolveResult gmres_solve(const DenseMatrix& a, std::span<const double> b, const GmresOptions& options) {
  check_system(a, b, "gmres_solve");
  if (!(options.tol > 0.0)) {
    throw std::invalid_argument("gmres_solve: tol must be positive");
  }
  if (options.restart < 1) {
    throw std::invalid_argument("gmres_solve: restart must be at least 1");
  }
  const std::size_t n = a.rows();
  const int max_iters = options.max_iters > 0 ? options.max_iters : static_cast<int>(10 * n);
  const auto m = static_cast<std::size_t>(std::min<std::size_t>(options.restart, std::max<std::size_t>(n, 1)));

  SolveResult result;
  result.x.assign(n, 0.0);
  result.stats.method = SolveMethod::gmres;

  const double bnorm = norm2(b);
  if (bnorm == 0.0) {
    result.stats.converged = true;
    return result;
  }

  std::vector<double> inv_diag(n, 1.0);
  if (options.jacobi) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i, i) == 0.0) {
        throw std::invalid_argument("gmres_solve: Jacobi preconditioning needs a nonzero diagonal");
      }
      inv_diag[i] = 1.0 / a(i, i);
    }
  }

  std::vector<std::vector<double>> basis(m + 1, std::vector<double>(n));
  std::vector<std::vector<double>> hess(m + 1, std::vector<double>(m, 0.0));  // hess[i][k]
  std::vector<double> cs(m), sn(m), g(m + 1), z(n);

  SolveResult best = result;
  best.stats.final_residual = 1.0;
  int total = 0;

  auto residual_of = [&](const std::vector<double>& x, std::vector<double>& r) {
    r = multiply(a, x, options.jobs);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = b[i] - r[i];
    }
    return norm2(r);
  };

  std::vector<double> r;
  double rnorm = residual_of(result.x, r);
  while (true) {
    const double rel = rnorm / bnorm;
    if (rel < best.stats.final_residual || total == 0) {
      best.x = result.x;
      best.stats.final_residual = rel;
      best.stats.iterations = total;
    }
    if (rel <= options.tol) {
      best.x = result.x;
      best.stats = {total, rel, true, SolveMethod::gmres};
      return best;
    }
    if (total >= max_iters) {
      best.stats.iterations = total;
      best.stats.converged = false;
      throw ConvergenceError("gmres_solve: no convergence after " + std::to_string(total) +
                                 " iterations, relative residual " + std::to_string(best.stats.final_residual),
                             best);
    }

    for (std::size_t i = 0; i < n; ++i) {
      basis[0][i] = r[i] / rnorm;
    }
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = rnorm;

    std::size_t k = 0;
    for (; k < m && total < max_iters; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        z[i] = inv_diag[i] * basis[k][i];
      }
      auto w = multiply(a, z, options.jobs);
      for (std::size_t i = 0; i <= k; ++i) {
        const double hik = dot(w, basis[i]);
        hess[i][k] = hik;
        for (std::size_t l = 0; l < n; ++l) {
          w[l] -= hik * basis[i][l];
        }
      }
      const double wnorm = norm2(w);
      hess[k + 1][k] = wnorm;
      if (wnorm > 0.0) {
        for (std::size_t l = 0; l < n; ++l) {
          basis[k + 1][l] = w[l] / wnorm;
        }
      }
      for (std::size_t i = 0; i < k; ++i) {
        const double t = cs[i] * hess[i][k] + sn[i] * hess[i + 1][k];
        hess[i + 1][k] = -sn[i] * hess[i][k] + cs[i] * hess[i + 1][k];
        hess[i][k] = t;
      }
      const double denom = std::hypot(hess[k][k], hess[k + 1][k]);
      cs[k] = denom > 0.0 ? hess[k][k] / denom : 1.0;
      sn[k] = denom > 0.0 ? hess[k + 1][k] / denom : 0.0;
      hess[k][k] = denom;
      hess[k + 1][k] = 0.0;
      g[k + 1] = -sn[k] * g[k];
      g[k] = cs[k] * g[k];
      ++total;
      if (std::abs(g[k + 1]) / bnorm <= options.tol || wnorm == 0.0) {
        ++k;
        break;
      }
    }

    // back substitution on the k x k triangle
    std::vector<double> y(k, 0.0);
    for (std::size_t ii = k; ii-- > 0;) {
      double acc = g[ii];
      for (std::size_t j = ii + 1; j < k; ++j) {
        acc -= hess[ii][j] * y[j];
      }
      y[ii] = hess[ii][ii] != 0.0 ? acc / hess[ii][ii] : 0.0;
    }
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        result.x[i] += inv_diag[i] * y[j] * basis[j][i];
      }
    }
    rnorm = residual_of(result.x, r);
  }
}

std::vector<double> direct_solve(const DenseMatrix& a, std::span<const double> b) {
  check_system(a, b, "direct_solve");
  const std::size_t n = a.rows();
  DenseMatrix lu = a;
  std::vector<double> x(b.begin(), b.end());
  double max_abs = 0.0;
  for (double v : a.data()) {
    max_abs = std::max(max_abs, std::abs(v));
  }
  const double threshold = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * max_abs;
  if (max_abs == 0.0 && n > 0) {
    throw SingularMatrixError("direct_solve: zero matrix");
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double pivot_abs = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > pivot_abs) {
        pivot_abs = std::abs(lu(i, k));
        pivot = i;
      }
    }
    if (pivot_abs <= threshold) {
      throw SingularMatrixError("direct_solve: numerically singular pivot in column " + std::to_string(k));
    }
    if (pivot != k) {
      std::swap_ranges(lu.row(k).begin(), lu.row(k).end(), lu.row(pivot).begin());
      std::swap(x[k], x[pivot]);
    }
    const auto pivot_row = lu.row(k);
    const double diag = pivot_row[k];
    for (std::size_t i = k + 1; i < n; ++i) {
      auto target = lu.row(i);
      const double factor = target[k] / diag;
      if (factor == 0.0) {
        continue;
      }
      target[k] = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) {
        target[j] -= factor * pivot_row[j];
      }
      x[i] -= factor * x[k];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    const auto row = lu.row(i);
    double acc = x[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      acc -= row[j] * x[j];
    }
    x[i] = acc / row[i];
  }
  return x;
}

}  // namespace levyexit
