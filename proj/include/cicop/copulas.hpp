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

#ifndef CICOP_COPULAS_HPP_
#define CICOP_COPULAS_HPP_

#include <string>

namespace cicop {

enum class CopulaFamily { Independence, Fgm, Clayton };

/// Parametric bivariate copula C(u,w) of a component paired with the latent
/// variable. The factories validate parameter ranges; aggregate construction
/// bypasses validation (used by tests to probe invalid parameters).
struct BivariateCopula {
  CopulaFamily family = CopulaFamily::Independence;
  double param = 0.0;  // alpha for Fgm, theta for Clayton

  static BivariateCopula independence();
  static BivariateCopula fgm(double alpha);      // |alpha| <= 1
  static BivariateCopula clayton(double theta);  // theta > 0
};

std::string family_name(CopulaFamily family);

/// C(u,w). Clayton boundaries are taken as limits: C(u,0) = C(0,w) = 0.
double copula_cdf(const BivariateCopula& cop, double u, double w);

/// h(u,w) = dC/dw, the conditional cdf of U given W = w. Closed form for
/// every family. Boundaries: h(0,w) = 0, h(1,w) = 1; Clayton h(u,0) = 1 for
/// u > 0 (the w->0+ limit).
double hfunc(const BivariateCopula& cop, double u, double w);

/// Unique u with h(u,w) = v; h is a cdf in u. Closed forms throughout
/// (Independence, FGM quadratic, Clayton rearranged inverse).
double hfunc_inverse(const BivariateCopula& cop, double v, double w);

/// dh/du, the copula density. Closed form for Independence and FGM, domain-
/// aware central difference (step 1e-6) otherwise.
double hfunc_du(const BivariateCopula& cop, double u, double w);

/// Maximal violation of each copula invariant over a uniform grid.
struct CopulaCheck {
  double grounding = 0.0;   // |C(u,0)|, |C(0,w)|
  double margin = 0.0;      // |C(u,1)-u|, |C(1,w)-w|
  double rectangle = 0.0;   // negative mass on a grid cell
  double h_range = 0.0;     // h outside [0,1], h(0,w), |h(1,w)-1|
  double h_monotone = 0.0;  // decrease of h in u at fixed w
  double h_margin = 0.0;    // |integral of h over w - u| (order-64 rule)

  double worst() const;
  bool pass(double tol) const { return worst() <= tol; }
};

/// Evaluates every invariant on a grid_size x grid_size grid (grid_size >= 3).
CopulaCheck validate(const BivariateCopula& cop, int grid_size);

}  // namespace cicop

#endif  // CICOP_COPULAS_HPP_
