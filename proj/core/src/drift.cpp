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

#include "levyexit/drift.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace levyexit {

namespace {

double parse_number(const std::string& token, const std::string& context) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("drift: cannot parse number '" + token + "' in '" + context + "'");
  }
  if (used != token.size() || !std::isfinite(value)) {
    throw std::invalid_argument("drift: cannot parse number '" + token + "' in '" + context + "'");
  }
  return value;
}

}  // namespace

DriftSpec DriftSpec::linear(double slope) {
  if (!std::isfinite(slope)) {
    throw std::invalid_argument("drift: linear slope must be finite");
  }
  DriftSpec spec;
  spec.kind_ = Kind::linear;
  spec.coefficients_ = {slope};
  return spec;
}

DriftSpec DriftSpec::polynomial(std::vector<double> coefficients) {
  for (double c : coefficients) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("drift: polynomial coefficients must be finite");
    }
  }
  DriftSpec spec;
  spec.kind_ = Kind::polynomial;
  spec.coefficients_ = std::move(coefficients);
  return spec;
}

DriftSpec DriftSpec::parse(const std::string& text) {
  if (text == "zero" || text == "0") {
    return zero();
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("drift: expected zero, linear:<k> or poly:<c0,c1,...>, got '" + text + "'");
  }
  const std::string head = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (head == "linear") {
    return linear(parse_number(body, text));
  }
  if (head == "poly") {
    std::vector<double> coefficients;
    std::stringstream stream(body);
    std::string token;
    while (std::getline(stream, token, ',')) {
      coefficients.push_back(parse_number(token, text));
    }
    if (coefficients.empty()) {
      throw std::invalid_argument("drift: polynomial needs at least one coefficient");
    }
    return polynomial(std::move(coefficients));
  }
  throw std::invalid_argument("drift: unknown kind '" + head + "'");
}

double DriftSpec::operator()(double x) const {
  switch (kind_) {
    case Kind::zero:
      return 0.0;
    case Kind::linear:
      return coefficients_[0] * x;
    case Kind::polynomial: {
      // Horner; with zero even coefficients this is exactly odd in x.
      double acc = 0.0;
      for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * x + *it;
      }
      return acc;
    }
  }
  return 0.0;
}

bool DriftSpec::is_odd() const {
  for (std::size_t p = 0; p < coefficients_.size(); p += 2) {
    if (kind_ == Kind::polynomial && coefficients_[p] != 0.0) {
      return false;
    }
  }
  return true;
}

std::string DriftSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind_) {
    case Kind::zero:
      return "zero";
    case Kind::linear:
      out << "linear:" << coefficients_[0];
      return out.str();
    case Kind::polynomial:
      out << "poly:";
      for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        out << (i ? "," : "") << coefficients_[i];
      }
      return out.str();
  }
  return "zero";
}

}  // namespace levyexit
