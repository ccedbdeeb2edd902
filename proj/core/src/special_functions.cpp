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

#include "levyexit/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace levyexit {

namespace {

// Lanczos g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  // t^(z+0.5) e^{-t} split to keep the power finite for large x
  const double half_pow = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t)) * sum;
}

// Borwein's algorithm 2 weights d_k for n terms.
constexpr int kEtaTerms = 40;

struct EtaWeights {
  std::array<double, kEtaTerms + 1> d{};
};

EtaWeights make_eta_weights() {
  EtaWeights w;
  const int n = kEtaTerms;
  // term_i = n (n + i - 1)! 4^i / ((n - i)! (2i)!), built by ratio
  double term = 1.0;  // i = 0: n (n-1)! / n! = 1
  double acc = term;
  w.d[0] = acc;
  for (int i = 1; i <= n; ++i) {
    const double ni = static_cast<double>(n + i - 1);
    const double nmi = static_cast<double>(n - i + 1);
    term *= ni * nmi * 4.0 / ((2.0 * i - 1.0) * (2.0 * i));
    acc += term;
    w.d[static_cast<std::size_t>(i)] = acc;
  }
  return w;
}

double eta(double s) {
  static const EtaWeights weights = make_eta_weights();
  const auto& d = weights.d;
  const double dn = d[kEtaTerms];
  double sum = 0.0;
  for (int k = kEtaTerms - 1; k >= 0; --k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (d[static_cast<std::size_t>(k)] - dn) * std::pow(static_cast<double>(k + 1), -s);
  }
  return -sum / dn;
}

}  // namespace

double gamma_real(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma_real: argument must be positive, got " + std::to_string(x));
  }
  if (x < 0.5) {
    return lanczos_gamma(x + 1.0) / x;
  }
  return lanczos_gamma(x);
}

double zeta_real(double x) {
  if (x == 1.0) {
    throw std::domain_error("zeta_real: pole at x = 1");
  }
  if (x == 0.0) {
    return -0.5;
  }
  // 1 - 2^{1-x} via expm1 stays accurate near the pole
  const double denom = -std::expm1((1.0 - x) * std::numbers::ln2);
  return eta(x) / denom;
}

}  // namespace levyexit
