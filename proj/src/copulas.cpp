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

#include "cicop/copulas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cicop/numerics.hpp"

namespace cicop {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

BivariateCopula BivariateCopula::independence() {
  return {CopulaFamily::Independence, 0.0};
}

BivariateCopula BivariateCopula::fgm(double alpha) {
  if (!(alpha >= -1.0 && alpha <= 1.0)) {
    throw std::invalid_argument("fgm: alpha must lie in [-1,1]");
  }
  return {CopulaFamily::Fgm, alpha};
}

BivariateCopula BivariateCopula::clayton(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("clayton: theta must be positive");
  }
  return {CopulaFamily::Clayton, theta};
}

std::string family_name(CopulaFamily family) {
  switch (family) {
    case CopulaFamily::Independence: return "independence";
    case CopulaFamily::Fgm: return "fgm";
    case CopulaFamily::Clayton: return "clayton";
  }
  return "unknown";
}

double copula_cdf(const BivariateCopula& cop, double u, double w) {
  u = clamp01(u);
  w = clamp01(w);
  switch (cop.family) {
    case CopulaFamily::Independence:
      return u * w;
    case CopulaFamily::Fgm:
      return u * w * (1.0 + cop.param * (1.0 - u) * (1.0 - w));
    case CopulaFamily::Clayton: {
      if (u == 0.0 || w == 0.0) return 0.0;
      const double t = cop.param;
      // (u^-t + w^-t - 1)^(-1/t) rewritten with min/max factored out so the
      // intermediates stay in [0,2] for any theta.
      const double m = std::min(u, w), M = std::max(u, w);
      return m * std::pow(1.0 + std::pow(m / M, t) - std::pow(m, t), -1.0 / t);
    }
  }
  return 0.0;
}

double hfunc(const BivariateCopula& cop, double u, double w) {
  u = clamp01(u);
  w = clamp01(w);
  switch (cop.family) {
    case CopulaFamily::Independence:
      return u;
    case CopulaFamily::Fgm:
      return u + cop.param * u * (1.0 - u) * (1.0 - 2.0 * w);
    case CopulaFamily::Clayton: {
      if (u == 0.0) return 0.0;
      if (u == 1.0) return 1.0;
      const double t = cop.param;
      if (w == 0.0) return 1.0;  // w->0+ limit for u > 0
      // w^(-t-1) (u^-t + w^-t - 1)^(-1/t-1) = (1 + (w/u)^t - w^t)^(-(t+1)/t)
      return std::pow(1.0 + std::pow(w / u, t) - std::pow(w, t),
                      -(t + 1.0) / t);
    }
  }
  return 0.0;
}

double hfunc_inverse(const BivariateCopula& cop, double v, double w) {
  v = clamp01(v);
  w = clamp01(w);
  if (v == 0.0) return 0.0;
  if (v == 1.0) return 1.0;
  switch (cop.family) {
    case CopulaFamily::Independence:
      return v;
    case CopulaFamily::Fgm: {
      // solve u + a*u*(1-u) = v with a = alpha*(1-2w), stable quadratic root
      const double a = cop.param * (1.0 - 2.0 * w);
      if (std::abs(a) < 1e-12) return v;
      const double disc = std::max((1.0 + a) * (1.0 + a) - 4.0 * a * v, 0.0);
      return clamp01(2.0 * v / (1.0 + a + std::sqrt(disc)));
    }
    case CopulaFamily::Clayton: {
      const double t = cop.param;
      if (w == 0.0) return 0.0;  // matches the h(u,0)=1 limit
      const double base = std::pow(v, -t / (t + 1.0)) - 1.0 + std::pow(w, t);
      return clamp01(w * std::pow(base, -1.0 / t));
    }
  }
  return v;
}

double hfunc_du(const BivariateCopula& cop, double u, double w) {
  u = clamp01(u);
  w = clamp01(w);
  switch (cop.family) {
    case CopulaFamily::Independence:
      return 1.0;
    case CopulaFamily::Fgm:
      return 1.0 + cop.param * (1.0 - 2.0 * u) * (1.0 - 2.0 * w);
    default:
      return central_diff_01([&](double x) { return hfunc(cop, x, w); }, u,
                             1e-6);
  }
}

double CopulaCheck::worst() const {
  return std::max({grounding, margin, rectangle, h_range, h_monotone, h_margin});
}

CopulaCheck validate(const BivariateCopula& cop, int grid_size) {
  if (grid_size < 3) {
    throw std::invalid_argument("validate: grid_size must be >= 3");
  }
  const int g = grid_size;
  Eigen::VectorXd pts(g);
  for (int i = 0; i < g; ++i) pts[i] = static_cast<double>(i) / (g - 1);

  CopulaCheck check;
  for (int i = 0; i < g; ++i) {
    const double u = pts[i];
    check.grounding = std::max({check.grounding,
                                std::abs(copula_cdf(cop, u, 0.0)),
                                std::abs(copula_cdf(cop, 0.0, u))});
    check.margin = std::max({check.margin,
                             std::abs(copula_cdf(cop, u, 1.0) - u),
                             std::abs(copula_cdf(cop, 1.0, u) - u)});
  }

  Eigen::MatrixXd c(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) c(i, j) = copula_cdf(cop, pts[i], pts[j]);
  for (int i = 0; i + 1 < g; ++i) {
    for (int j = 0; j + 1 < g; ++j) {
      const double mass =
          c(i + 1, j + 1) - c(i, j + 1) - c(i + 1, j) + c(i, j);
      check.rectangle = std::max(check.rectangle, -mass);
    }
  }

  for (int j = 0; j < g; ++j) {
    const double w = pts[j];
    check.h_range = std::max({check.h_range, std::abs(hfunc(cop, 0.0, w)),
                              std::abs(hfunc(cop, 1.0, w) - 1.0)});
    double prev = hfunc(cop, 0.0, w);
    for (int i = 1; i < g; ++i) {
      const double h = hfunc(cop, pts[i], w);
      check.h_range = std::max({check.h_range, -h, h - 1.0});
      check.h_monotone = std::max(check.h_monotone, prev - h);
      prev = h;
    }
  }

  const QuadratureRule rule = gauss_rule(64);
  for (int i = 0; i < g; ++i) {
    const double u = pts[i];
    const double rec =
        integrate_01([&](double w) { return hfunc(cop, u, w); }, rule);
    check.h_margin = std::max(check.h_margin, std::abs(rec - u));
  }
  return check;
}

}  // namespace cicop
