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

#include "cicop/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cicop/errors.hpp"

namespace cicop {

namespace {

void require_component_index(const CiModel& model, int i, const char* where) {
  if (i < 1 || i > model.size()) {
    throw std::invalid_argument(std::string(where) +
                                ": component index out of range");
  }
}

void require_dim(const CiModel& model, const Eigen::VectorXd& u,
                 const char* where) {
  if (u.size() != model.size()) {
    throw std::invalid_argument(std::string(where) +
                                ": expected one value per component");
  }
}

}  // namespace

CiModel::CiModel(std::vector<Component> components, Marginal z_marginal,
                 int quad_order)
    : components_(std::move(components)),
      z_marginal_(z_marginal),
      quad_(gauss_rule(quad_order)) {
  if (components_.empty()) {
    throw ValidationError("model requires at least one component");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    // gate on the analytic invariants only; the quadrature-based margin
    // recovery in CopulaCheck depends on the rule order, not on validity
    const CopulaCheck check = validate(components_[i].copula, 21);
    const double analytic = std::max({check.grounding, check.margin,
                                      check.rectangle, check.h_range,
                                      check.h_monotone});
    if (analytic > 1e-8) {
      throw ValidationError("component " + std::to_string(i + 1) +
                            ": copula fails validation (worst violation " +
                            std::to_string(analytic) + ")");
    }
  }
}

const Component& CiModel::component(int i) const {
  require_component_index(*this, i, "component");
  return components_[static_cast<std::size_t>(i - 1)];
}

double CiModel::component_hfunc(int i, double x, double w) const {
  const Component& c = component(i);
  return hfunc(c.copula, cdf(c.marginal, x), w);
}

double joint_copula(const CiModel& model, const Eigen::VectorXd& u) {
  require_dim(model, u, "joint_copula");
  const int n = model.size();
  return integrate_01(
      [&](double s) {
        double prod = 1.0;
        for (int i = 0; i < n; ++i) {
          prod *= hfunc(model.component(i + 1).copula, u[i], s);
        }
        return prod;
      },
      model.quadrature());
}

double joint_copula_with_z(const CiModel& model, const Eigen::VectorXd& u,
                           double w) {
  require_dim(model, u, "joint_copula_with_z");
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::invalid_argument("joint_copula_with_z: w must lie in [0,1]");
  }
  const int n = model.size();
  return integrate(
      [&](double s) {
        double prod = 1.0;
        for (int i = 0; i < n; ++i) {
          prod *= hfunc(model.component(i + 1).copula, u[i], s);
        }
        return prod;
      },
      model.quadrature(), 0.0, w);
}

double joint_cdf(const CiModel& model, const Eigen::VectorXd& x) {
  require_dim(model, x, "joint_cdf");
  Eigen::VectorXd u(x.size());
  for (int i = 0; i < x.size(); ++i) {
    u[i] = cdf(model.component(i + 1).marginal, x[i]);
  }
  return joint_copula(model, u);
}

double conditional_cdf(const CiModel& model, int i, double x, double z) {
  require_component_index(model, i, "conditional_cdf");
  return model.component_hfunc(i, x, cdf(model.z_marginal(), z));
}

double rectangle_probability(const CiModel& model, const Eigen::VectorXd& lo,
                             const Eigen::VectorXd& hi) {
  require_dim(model, lo, "rectangle_probability");
  require_dim(model, hi, "rectangle_probability");
  const int n = model.size();
  Eigen::VectorXd ua(n), ub(n);
  for (int i = 0; i < n; ++i) {
    if (!(lo[i] <= hi[i])) {
      throw std::invalid_argument(
          "rectangle_probability: malformed interval (lo > hi)");
    }
    const Marginal& m = model.component(i + 1).marginal;
    ua[i] = cdf(m, lo[i]);
    ub[i] = cdf(m, hi[i]);
  }
  return integrate_01(
      [&](double s) {
        double prod = 1.0;
        for (int i = 0; i < n; ++i) {
          const BivariateCopula& c = model.component(i + 1).copula;
          prod *= hfunc(c, ub[i], s) - hfunc(c, ua[i], s);
        }
        return prod;
      },
      model.quadrature());
}

double stress_strength(const CiModel& model, int i, int j) {
  require_component_index(model, i, "stress_strength");
  require_component_index(model, j, "stress_strength");
  if (i == j) {
    throw std::invalid_argument("stress_strength: indices must differ");
  }
  const Component& ci = model.component(i);
  const Component& cj = model.component(j);

  // The composition F_i(Q_j(u)) has endpoint branch points (fractional
  // power-marginal ratios) and saturates with a kink where Q_j(u) leaves
  // i's support, both invisible to the model's base rule. Split the inner
  // range at the kink and regularize each segment's endpoints with the
  // cubic map u = lo + len*s^2(3-2s), whose Jacobian vanishes at both ends.
  const int base = model.quadrature().order();
  const QuadratureRule rule = gauss_rule(std::clamp(4 * base, base, 512));

  std::vector<double> cuts{0.0, 1.0};
  const double top = upper_bound(ci.marginal);
  if (std::isfinite(top)) {
    const double image = cdf(cj.marginal, top);
    if (image > 1e-12 && image < 1.0 - 1e-12) {
      cuts.insert(cuts.begin() + 1, image);
    }
  }

  return integrate_01(
      [&](double w) {
        const auto integrand = [&](double u) {
          const double x = quantile(cj.marginal, u);
          const double fi = hfunc(ci.copula, cdf(ci.marginal, x), w);
          return fi * hfunc_du(cj.copula, u, w);
        };
        double inner = 0.0;
        for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
          const double lo = cuts[seg], len = cuts[seg + 1] - cuts[seg];
          inner += integrate_01(
              [&](double s) {
                const double u = lo + len * s * s * (3.0 - 2.0 * s);
                return integrand(u) * len * 6.0 * s * (1.0 - s);
              },
              rule);
        }
        return inner;
      },
      rule);
}

CandidateCheck validate_candidate(const CandidateCopula& candidate,
                                  int grid_size) {
  if (candidate.dim < 1 || !candidate.cdf) {
    throw std::invalid_argument("validate_candidate: empty candidate");
  }
  if (grid_size < 3) {
    throw std::invalid_argument("validate_candidate: grid_size must be >= 3");
  }
  const int n = candidate.dim;
  CandidateCheck check;
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  for (int g = 0; g < grid_size; ++g) {
    const double t = static_cast<double>(g) / (grid_size - 1);
    // grounding: any argument at zero kills the copula
    check.grounding =
        std::max(check.grounding, std::abs(candidate.cdf(ones, 0.0)));
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXd u = ones;
      u[k] = 0.0;
      check.grounding = std::max(check.grounding, std::abs(candidate.cdf(u, t)));
      u[k] = t;
      check.margin =
          std::max(check.margin, std::abs(candidate.cdf(u, 1.0) - t));
    }
    check.margin =
        std::max(check.margin, std::abs(candidate.cdf(ones, t) - t));
  }
  return check;
}

CiReport verify_ci(const CandidateCopula& candidate, const CiModel& model,
                   int grid_size) {
  if (candidate.dim != model.size()) {
    throw std::invalid_argument(
        "verify_ci: candidate dimension does not match the model");
  }
  if (grid_size < 3) {
    throw std::invalid_argument("verify_ci: grid_size must be >= 3");
  }
  const int n = model.size();
  const double points = std::pow(static_cast<double>(grid_size), n + 1);
  if (points > 4e6) {
    throw std::invalid_argument("verify_ci: grid too large for this dimension");
  }
  const CandidateCheck shape = validate_candidate(candidate, grid_size);
  if (!shape.pass(1e-7)) {
    throw ValidationError("verify_ci: candidate is not grounded with uniform "
                          "margins on the grid");
  }

  const double step_h = 1e-5;
  CiReport report;
  report.argmax_u = Eigen::VectorXd::Zero(n);

  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  Eigen::VectorXd u(n);
  const auto grid_value = [&](int k) {
    return static_cast<double>(k) / (grid_size - 1);
  };
  bool done = false;
  while (!done) {
    for (int i = 0; i < n; ++i) u[i] = grid_value(idx[static_cast<std::size_t>(i)]);
    for (int gw = 0; gw < grid_size; ++gw) {
      const double w = grid_value(gw);
      const double dw = central_diff_01(
          [&](double s) { return candidate.cdf(u, s); }, w, step_h);
      double prod = 1.0;
      for (int i = 0; i < n; ++i) {
        prod *= hfunc(model.component(i + 1).copula, u[i], w);
      }
      const double residual = std::abs(dw - prod);
      if (residual > report.max_residual) {
        report.max_residual = residual;
        report.argmax_u = u;
        report.argmax_w = w;
      }
    }
    done = true;
    for (int i = 0; i < n; ++i) {
      auto& k = idx[static_cast<std::size_t>(i)];
      if (++k < grid_size) {
        done = false;
        break;
      }
      k = 0;
    }
  }
  report.pass = report.max_residual <= CiReport::kTolerance;
  return report;
}

CandidateCopula product_candidate(int n) {
  if (n < 1) throw std::invalid_argument("product_candidate: n must be >= 1");
  return {n, [](const Eigen::VectorXd& u, double w) {
            return u.prod() * w;
          }};
}

CandidateCopula fgm_conditional_candidate(double alpha) {
  const double a = BivariateCopula::fgm(alpha).param;
  // grounded antiderivative of the product of two FGM h-functions
  return {2, [a](const Eigen::VectorXd& u, double w) {
            const double p = u[0], q = u[1];
            const double c = 1.0 - 2.0 * w;
            return p * q * w + a * p * q * w * (2.0 - p - q) * (1.0 - w) +
                   a * a / 6.0 * p * q * (1.0 - p) * (1.0 - q) *
                       (1.0 - c * c * c);
          }};
}

CandidateCopula fgm_direct_candidate(double alpha) {
  const double a = BivariateCopula::fgm(alpha).param;
  return {2, [a](const Eigen::VectorXd& u, double w) {
            return u[0] * u[1] * w *
                   (1.0 + a * (1.0 - u[0]) * (1.0 - u[1]));
          }};
}

}  // namespace cicop
