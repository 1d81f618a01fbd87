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

#ifndef CICOP_MODEL_HPP_
#define CICOP_MODEL_HPP_

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "cicop/copulas.hpp"
#include "cicop/marginals.hpp"
#include "cicop/numerics.hpp"

namespace cicop {

/// One observable component: its marginal and its copula with the latent
/// variable.
struct Component {
  BivariateCopula copula;
  Marginal marginal;
};

/// A model of X_1..X_n rendered conditionally independent by a latent Z.
/// The joint law is determined by the n component pairs and the Z marginal;
/// every evaluation happens in copula coordinates u_i = F_i(x_i), w = F_Z(z),
/// so densities of Z never enter. Immutable after construction; all
/// evaluations are pure and thread-safe.
class CiModel {
 public:
  /// Validates n >= 1 and each copula on a 21-point grid (ValidationError on
  /// failure). quad_order (1..512, default 64) fixes the w-integration rule.
  CiModel(std::vector<Component> components, Marginal z_marginal,
          int quad_order = 64);

  int size() const { return static_cast<int>(components_.size()); }
  const Component& component(int i) const;  // 1-based, 1 <= i <= n
  const Marginal& z_marginal() const { return z_marginal_; }
  const QuadratureRule& quadrature() const { return quad_; }

  /// h_i(F_i(x), w): conditional cdf of X_i in copula w-coordinates.
  double component_hfunc(int i, double x, double w) const;

 private:
  std::vector<Component> components_;
  Marginal z_marginal_;
  QuadratureRule quad_;
};

/// C(u_1..u_n): w-integral of the product of component h-functions.
double joint_copula(const CiModel& model, const Eigen::VectorXd& u);

/// C(u_1..u_n, w): the same product integrated over [0,w]; the full copula
/// of (X_1..X_n, Z). Reduces to joint_copula at w = 1 and to 0 at w = 0.
double joint_copula_with_z(const CiModel& model, const Eigen::VectorXd& u,
                           double w);

/// F(x_1..x_n) = joint_copula at u_i = F_i(x_i).
double joint_cdf(const CiModel& model, const Eigen::VectorXd& x);

/// cdf of X_i given Z = z, namely h_i(F_i(x), F_Z(z)). 1-based i.
double conditional_cdf(const CiModel& model, int i, double x, double z);

/// P{a_i < X_i <= b_i for all i} by one w-quadrature of the product of
/// conditional rectangle masses.
double rectangle_probability(const CiModel& model, const Eigen::VectorXd& lo,
                             const Eigen::VectorXd& hi);

/// P{X_i < X_j}, i != j (1-based), via double quadrature in copula
/// coordinates: the inner variable is u = F_j(x) and the integrand is
/// h_i(F_i(F_j^-1(u)), w) * dh_j/du(u, w).
double stress_strength(const CiModel& model, int i, int j);

/// Black-box candidate (n+1)-copula C(u_1..u_n, w) supplied for the
/// conditional-independence test.
struct CandidateCopula {
  int dim = 0;  // number of u arguments (the copula has dim+1 arguments)
  std::function<double(const Eigen::VectorXd& u, double w)> cdf;
};

/// Grounding / uniform-margin violations of a candidate on a grid.
struct CandidateCheck {
  double grounding = 0.0;
  double margin = 0.0;
  bool pass(double tol) const { return grounding <= tol && margin <= tol; }
};

CandidateCheck validate_candidate(const CandidateCopula& candidate,
                                  int grid_size);

/// Residual of the conditional-independence criterion: the w-derivative of
/// the candidate must equal the product of the model's h-functions
/// everywhere. The derivative is a finite difference (step 1e-5), so the
/// pass tolerance is 1e-4.
struct CiReport {
  double max_residual = 0.0;
  Eigen::VectorXd argmax_u;
  double argmax_w = 0.0;
  bool pass = false;

  static constexpr double kTolerance = 1e-4;
};

/// Scans the full (grid_size)^(n+1) tensor grid. The candidate is first
/// validated (grounded, uniform margins) at tolerance 1e-7.
CiReport verify_ci(const CandidateCopula& candidate, const CiModel& model,
                   int grid_size);

/// Built-in candidates (also exposed through the CLI):
/// the (n+1)-dimensional product copula,
CandidateCopula product_candidate(int n);
/// the trivariate copula obtained by integrating two FGM(alpha)
/// conditionals over the latent variable (conditionally independent), and
CandidateCopula fgm_conditional_candidate(double alpha);
/// the trivariate copula coupling u and v directly by an FGM(alpha) factor
/// (not conditionally independent; fails verify_ci).
CandidateCopula fgm_direct_candidate(double alpha);

}  // namespace cicop

#endif  // CICOP_MODEL_HPP_
