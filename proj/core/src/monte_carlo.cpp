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

#include "levyexit/monte_carlo.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "levyexit/parallel.hpp"

namespace levyexit {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// Pairwise sum; the split points depend only on the length.
double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double acc = 0.0;
    for (double x : v) {
      acc += x;
    }
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

McEstimate summarize(std::span<const double> samples) {
  McEstimate est;
  est.n_effective = samples.size();
  if (samples.empty()) {
    return est;
  }
  const auto n = static_cast<double>(samples.size());
  est.mean = pairwise_sum(samples) / n;
  if (samples.size() > 1) {
    std::vector<double> sq(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double dev = samples[i] - est.mean;
      sq[i] = dev * dev;
    }
    const double variance = pairwise_sum(sq) / (n - 1.0);
    est.std_error = std::sqrt(variance / n);
  }
  return est;
}

// CMS draw from S_alpha(1, beta, 0).
double standard_stable(double alpha, double beta, PathRng& rng) {
  const double v = kPi * (rng.uniform_open() - 0.5);
  const double w = -std::log(rng.uniform_open());
  if (is_alpha_one(alpha)) {
    const double shifted = kPi / 2.0 + beta * v;
    return 2.0 / kPi * (shifted * std::tan(v) - beta * std::log((kPi / 2.0) * w * std::cos(v) / shifted));
  }
  const double tan_term = beta * std::tan(kPi * alpha / 2.0);
  const double skew = std::atan(tan_term) / alpha;
  const double scale = std::pow(1.0 + tan_term * tan_term, 1.0 / (2.0 * alpha));
  const double angle = alpha * (v + skew);
  return scale * std::sin(angle) / std::pow(std::cos(v), 1.0 / alpha) *
         std::pow(std::cos(v - angle) / w, (1.0 - alpha) / alpha);
}

}  // namespace

PathRng::PathRng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t mix = seed;
  // decorrelate neighbouring streams before expanding into the state
  std::uint64_t key = splitmix64(mix) ^ (stream * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL);
  for (auto& word : state_) {
    word = splitmix64(key);
  }
}

PathRng::result_type PathRng::operator()() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double PathRng::uniform_open() {
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double PathRng::standard_normal() {
  // Box-Muller, cosine branch only so each call consumes two words.
  const double u1 = uniform_open();
  const double u2 = uniform_open();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

void McConfig::validate() const {
  if (n_paths < 1) {
    throw std::invalid_argument("monte carlo: n_paths must be at least 1");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("monte carlo: dt must be positive");
  }
  if (!(t_max >= dt) || !std::isfinite(t_max)) {
    throw std::invalid_argument("monte carlo: t_max must be at least dt");
  }
}

double sample_stable(const StableParams& params, PathRng& rng) {
  const double x = standard_stable(params.alpha, params.beta, rng);
  if (is_alpha_one(params.alpha)) {
    const double log_sigma = params.sigma > 0.0 ? std::log(params.sigma) : 0.0;
    return params.sigma * x + 2.0 / kPi * params.beta * params.sigma * log_sigma + params.mu;
  }
  return params.sigma * x + params.mu;
}

double increment(const ProblemSpec& spec, double dt, PathRng& rng) {
  double out = 0.0;
  if (spec.d > 0.0) {
    out += std::sqrt(spec.d * dt) * rng.standard_normal();
  }
  if (spec.eps > 0.0) {
    const double alpha = spec.stable.alpha;
    const double xi = standard_stable(alpha, spec.stable.beta, rng);
    const double c = spec.eps * dt;
    if (is_alpha_one(alpha)) {
      out += c * xi + c * spec.stable.beta * (2.0 / kPi) * std::log(c);
    } else {
      out += std::pow(c, 1.0 / alpha) * xi;
    }
  }
  return out;
}

McExitEstimate estimate_exit(const ProblemSpec& spec, double x0, const McConfig& config) {
  spec.validate();
  config.validate();
  if (!(std::abs(x0) < spec.b)) {
    throw std::invalid_argument("monte carlo: starting point must lie inside (-b, b)");
  }
  const auto n = static_cast<std::size_t>(config.n_paths);
  const auto max_steps = static_cast<std::uint64_t>(std::ceil(config.t_max / config.dt - 1e-9));
  std::vector<double> exit_times(n);
  // 1 = landed in [b, inf), 0 = landed in (-inf, -b], -1 = censored
  std::vector<signed char> outcome(n);

  parallel_for(n, config.jobs, [&](std::size_t path) {
    PathRng rng(config.seed, path);
    double x = x0;
    std::uint64_t steps = 0;
    signed char result = -1;
    while (steps < max_steps) {
      x += spec.drift(x) * config.dt + increment(spec, config.dt, rng);
      ++steps;
      if (x >= spec.b) {
        result = 1;
        break;
      }
      if (x <= -spec.b) {
        result = 0;
        break;
      }
    }
    exit_times[path] = static_cast<double>(steps) * config.dt;
    outcome[path] = result;
  });

  std::vector<double> landed_right;
  landed_right.reserve(n);
  std::size_t censored = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (outcome[i] < 0) {
      ++censored;
    } else {
      landed_right.push_back(outcome[i] == 1 ? 1.0 : 0.0);
    }
  }
  const double censored_fraction = static_cast<double>(censored) / static_cast<double>(n);

  McExitEstimate out;
  out.met = summarize(exit_times);
  out.escape_right = summarize(landed_right);
  for (McEstimate* est : {&out.met, &out.escape_right}) {
    est->censored_fraction = censored_fraction;
    est->warning = censored_fraction > 0.01;
  }
  return out;
}

}  // namespace levyexit
