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

#ifndef CICOP_NUMERICS_HPP_
#define CICOP_NUMERICS_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <utility>

#include "cicop/errors.hpp"

namespace cicop {

/// Fixed Gauss-Legendre rule mapped to [0,1]. Nodes are strictly increasing
/// and interior; weights are positive and sum to 1.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  int order() const { return static_cast<int>(nodes.size()); }
};

/// Gauss-Legendre nodes/weights on [0,1], exact for polynomials of degree
/// <= 2*order-1. Accepts 1 <= order <= 512.
QuadratureRule gauss_rule(int order);

/// Sum of weights[i]*f(nodes[i]). Every node value must be finite.
template <class F>
double integrate_01(F&& f, const QuadratureRule& rule) {
  double acc = 0.0;
  for (int i = 0; i < rule.order(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v)) {
      throw NumericError("integrate_01: non-finite integrand value at node " +
                         std::to_string(rule.nodes[i]));
    }
    acc += rule.weights[i] * v;
  }
  return acc;
}

/// Same rule affinely mapped to [lo,hi]. Degenerate intervals integrate to 0.
template <class F>
double integrate(F&& f, const QuadratureRule& rule, double lo, double hi) {
  const double len = hi - lo;
  if (len == 0.0) return 0.0;
  double acc = 0.0;
  for (int i = 0; i < rule.order(); ++i) {
    const double x = lo + len * rule.nodes[i];
    const double v = f(x);
    if (!std::isfinite(v)) {
      throw NumericError("integrate: non-finite integrand value at node " +
                         std::to_string(x));
    }
    acc += rule.weights[i] * v;
  }
  return len * acc;
}

/// Second-order central difference (f(x+h) - f(x-h)) / (2h).
template <class F>
double central_diff(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Central difference restricted to [0,1]: falls back to the second-order
/// one-sided stencil within h of either endpoint.
template <class F>
double central_diff_01(F&& f, double x, double h) {
  if (x - h >= 0.0 && x + h <= 1.0) return central_diff(f, x, h);
  if (x + 2.0 * h <= 1.0) {
    return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
  }
  if (x - 2.0 * h >= 0.0) {
    return (3.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h)) / (2.0 * h);
  }
  throw NumericError("central_diff_01: step too large for the unit interval");
}

/// Bracket [lo,hi] with a sign change and an absolute tolerance on x.
struct RootBracket {
  double lo = 0.0;
  double hi = 1.0;
  double tol = 1e-12;
};

/// Bisection/secant hybrid for a bracketed root. A missing sign change is a
/// NumericError; hitting the iteration cap returns the best estimate.
template <class F>
double find_root(F&& f, const RootBracket& bracket) {
  if (!(bracket.lo < bracket.hi) || !(bracket.tol > 0.0)) {
    throw std::invalid_argument("find_root: bracket requires lo < hi and tol > 0");
  }
  double a = bracket.lo, b = bracket.hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw NumericError("find_root: no sign change across bracket");
  }
  for (int it = 0; it < 200 && b - a > 2.0 * bracket.tol; ++it) {
    double x = 0.5 * (a + b);
    if (it % 2 == 1 && fb != fa) {
      // secant probe, accepted only when safely interior
      const double s = (a * fb - b * fa) / (fb - fa);
      const double pad = 0.01 * (b - a);
      if (s > a + pad && s < b - pad) x = s;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (fb > 0.0)) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace cicop

#endif  // CICOP_NUMERICS_HPP_
