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

#include "cicop/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cicop {

QuadratureRule gauss_rule(int order) {
  if (order < 1 || order > 512) {
    throw std::invalid_argument("gauss_rule: order must lie in [1,512]");
  }
  Eigen::VectorXd x(order), w(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration on P_n, starting from the Chebyshev-like estimate.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = order * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 3e-15) break;
    }
    // map [-1,1] to [0,1]; z decreases with i, so nodes come out increasing
    x[i] = 0.5 * (1.0 - z);
    x[order - 1 - i] = 0.5 * (1.0 + z);
    w[i] = w[order - 1 - i] = 1.0 / ((1.0 - z * z) * pp * pp);
  }
  w /= w.sum();  // rule integrates the constant 1 exactly
  return {std::move(x), std::move(w)};
}

}  // namespace cicop
