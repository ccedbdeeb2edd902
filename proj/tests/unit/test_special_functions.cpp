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

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "levyexit/special_functions.hpp"

using namespace levyexit;

TEST_SUITE("special_functions") {
  TEST_CASE("gamma_real frozen examples") {
    CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
    CHECK(gamma_real(1.75) == doctest::Approx(0.919062526848883).epsilon(1e-12));
  }

  TEST_CASE("gamma_real matches the reference on (0, 20]") {
    for (double x : {1e-3, 0.05, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.5, 3.3, 7.1, 12.0, 19.9}) {
      const double ref = boost::math::tgamma(x);
      CHECK(std::abs(gamma_real(x) - ref) <= 1e-10 * std::abs(ref));
    }
  }

  TEST_CASE("gamma_real rejects nonpositive arguments") {
    CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_real(-1.5), std::domain_error);
  }

  TEST_CASE("zeta_real frozen examples") {
    CHECK(zeta_real(0.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(zeta_real(-0.5) == doctest::Approx(-0.207886224977355).epsilon(1e-10));
    CHECK(zeta_real(0.5) == doctest::Approx(-1.460354508809587).epsilon(1e-10));
    CHECK(zeta_real(-1.0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-10));
  }

  TEST_CASE("zeta_real matches the reference on [-1, 0.99]") {
    for (double x = -1.0; x <= 0.99; x += 0.07) {
      CHECK(std::abs(zeta_real(x) - boost::math::zeta(x)) <= 1e-10);
    }
    CHECK(std::abs(zeta_real(0.99) - boost::math::zeta(0.99)) <= 1e-10 * 100.0);
  }

  TEST_CASE("zeta_real pole") { CHECK_THROWS_AS(zeta_real(1.0), std::domain_error); }
}
