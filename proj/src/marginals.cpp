// Copyright 2026 The cicopula Authors.
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

#include "cicop/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cicop {

Marginal Marginal::uniform01() { return {MarginalFamily::Uniform01, 0.0}; }

Marginal Marginal::power(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("power: exponent k must be positive");
  }
  return {MarginalFamily::Power, k};
}

Marginal Marginal::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("exponential: rate must be positive");
  }
  return {MarginalFamily::Exponential, rate};
}

std::string family_name(MarginalFamily family) {
  switch (family) {
    case MarginalFamily::Uniform01: return "uniform01";
    case MarginalFamily::Power: return "power";
    case MarginalFamily::Exponential: return "exponential";
  }
  return "unknown";
}

double cdf(const Marginal& m, double x) {
  switch (m.family) {
    case MarginalFamily::Uniform01:
      return std::clamp(x, 0.0, 1.0);
    case MarginalFamily::Power:
      if (x <= 0.0) return 0.0;
      if (x >= 1.0) return 1.0;
      return std::pow(x, m.param);
    case MarginalFamily::Exponential:
      if (x <= 0.0) return 0.0;
      return -std::expm1(-m.param * x);
  }
  return 0.0;
}

double pdf(const Marginal& m, double x) {
  switch (m.family) {
    case MarginalFamily::Uniform01:
      return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0;
    case MarginalFamily::Power:
      if (x < 0.0 || x > 1.0) return 0.0;
      return m.param * std::pow(x, m.param - 1.0);
    case MarginalFamily::Exponential:
      if (x < 0.0) return 0.0;
      return m.param * std::exp(-m.param * x);
  }
  return 0.0;
}

double quantile(const Marginal& m, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("quantile: p must lie in [0,1]");
  }
  switch (m.family) {
    case MarginalFamily::Uniform01:
      return p;
    case MarginalFamily::Power:
      return std::pow(p, 1.0 / m.param);
    case MarginalFamily::Exponential:
      if (p == 1.0) return std::numeric_limits<double>::infinity();
      return -std::log1p(-p) / m.param;
  }
  return p;
}

double lower_bound(const Marginal&) { return 0.0; }

double upper_bound(const Marginal& m) {
  return m.family == MarginalFamily::Exponential
             ? std::numeric_limits<double>::infinity()
             : 1.0;
}

}  // namespace cicop
