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

#include "cicop/orderstats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cicop/errors.hpp"
#include "cicop/permanent.hpp"

namespace cicop {

namespace {

constexpr int kPermanentComponentLimit = 12;

void require_rank(int r, int n, const char* where) {
  if (r < 1 || r > n) {
    throw std::invalid_argument(std::string(where) + ": rank out of range");
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// probs(i, j) = h_i(F_i(x_j), s) for the sorted thresholds x_j.
Eigen::MatrixXd conditional_probs(const CiModel& model,
                                  const Eigen::VectorXd& u_levels, double s) {
  const int n = model.size();
  const int k = static_cast<int>(u_levels.size()) / n;
  Eigen::MatrixXd probs(n, k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      probs(i, j) = hfunc(model.component(i + 1).copula, u_levels[i * k + j], s);
    }
  }
  return probs;
}

// Copula-space levels u(i, j) = F_i(x_j), flattened row-major.
Eigen::VectorXd threshold_levels(const CiModel& model,
                                 const Eigen::VectorXd& thresholds) {
  const int n = model.size();
  const int k = static_cast<int>(thresholds.size());
  Eigen::VectorXd levels(n * k);
  for (int i = 0; i < n; ++i) {
    const Marginal& m = model.component(i + 1).marginal;
    for (int j = 0; j < k; ++j) levels[i * k + j] = cdf(m, thresholds[j]);
  }
  return levels;
}

}  // namespace

CountDistribution::CountDistribution(int n, int k, Eigen::VectorXd pmf)
    : n_(n), k_(k), pmf_(std::move(pmf)) {}

std::size_t CountDistribution::index(const std::vector<int>& counts) const {
  std::size_t idx = 0, stride = 1;
  for (int j = 0; j < k_; ++j) {
    idx += static_cast<std::size_t>(counts[static_cast<std::size_t>(j)]) * stride;
    stride *= static_cast<std::size_t>(n_ + 1);
  }
  return idx;
}

CountDistribution CountDistribution::from_probabilities(
    const Eigen::MatrixXd& probs) {
  const int n = static_cast<int>(probs.rows());
  const int k = static_cast<int>(probs.cols());
  if (n < 1 || k < 1) {
    throw std::invalid_argument(
        "count distribution: need at least one trial and one threshold");
  }
  double states = 1.0;
  for (int j = 0; j < k; ++j) states *= n + 1;
  if (states > static_cast<double>(1 << 24)) {
    throw std::invalid_argument("count distribution: state space too large");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      const double p = probs(i, j);
      if (!(p >= -1e-9 && p <= 1.0 + 1e-9)) {
        throw std::invalid_argument(
            "count distribution: probability outside [0,1]");
      }
      if (j > 0 && probs(i, j) < probs(i, j - 1) - 1e-9) {
        throw std::invalid_argument(
            "count distribution: per-trial threshold probabilities must be "
            "nondecreasing");
      }
    }
  }

  const auto size = static_cast<Eigen::Index>(states);
  std::vector<std::size_t> stride(static_cast<std::size_t>(k));
  std::size_t s = 1;
  for (int j = 0; j < k; ++j) {
    stride[static_cast<std::size_t>(j)] = s;
    s *= static_cast<std::size_t>(n + 1);
  }
  // bucket b contributes +1 to every count c_j with j >= b
  std::vector<std::size_t> offset(static_cast<std::size_t>(k + 1), 0);
  for (int b = k - 1; b >= 0; --b) {
    offset[static_cast<std::size_t>(b)] =
        offset[static_cast<std::size_t>(b + 1)] + stride[static_cast<std::size_t>(b)];
  }

  Eigen::VectorXd pmf = Eigen::VectorXd::Zero(size);
  pmf[0] = 1.0;
  Eigen::VectorXd next(size);
  for (int i = 0; i < n; ++i) {
    std::vector<double> bucket(static_cast<std::size_t>(k + 1));
    double prev = 0.0;
    for (int b = 0; b < k; ++b) {
      const double p = std::clamp(probs(i, b), prev, 1.0);
      bucket[static_cast<std::size_t>(b)] = p - prev;
      prev = p;
    }
    bucket[static_cast<std::size_t>(k)] = 1.0 - prev;

    next.setZero();
    for (Eigen::Index idx = 0; idx < size; ++idx) {
      const double mass = pmf[idx];
      if (mass == 0.0) continue;
      for (int b = 0; b <= k; ++b) {
        next[idx + static_cast<Eigen::Index>(offset[static_cast<std::size_t>(b)])] +=
            bucket[static_cast<std::size_t>(b)] * mass;
      }
    }
    pmf.swap(next);
  }
  return CountDistribution(n, k, std::move(pmf));
}

double CountDistribution::pmf(const std::vector<int>& counts) const {
  if (static_cast<int>(counts.size()) != k_) {
    throw std::invalid_argument("pmf: one count per threshold required");
  }
  for (int c : counts) {
    if (c < 0 || c > n_) return 0.0;
  }
  return pmf_[static_cast<Eigen::Index>(index(counts))];
}

double CountDistribution::tail(int r) const {
  if (k_ != 1) {
    throw std::invalid_argument("tail: defined for a single threshold");
  }
  if (r <= 0) return 1.0;
  if (r > n_) return 0.0;
  return pmf_.tail(n_ + 1 - r).sum();
}

double CountDistribution::joint_tail(const std::vector<int>& ranks) const {
  if (static_cast<int>(ranks.size()) != k_) {
    throw std::invalid_argument("joint_tail: one rank per threshold required");
  }
  double acc = 0.0;
  std::vector<int> c(static_cast<std::size_t>(k_), 0);
  for (Eigen::Index idx = 0; idx < pmf_.size(); ++idx) {
    Eigen::Index rest = idx;
    bool keep = true;
    for (int j = 0; j < k_; ++j) {
      c[static_cast<std::size_t>(j)] = static_cast<int>(rest % (n_ + 1));
      rest /= (n_ + 1);
      if (c[static_cast<std::size_t>(j)] < ranks[static_cast<std::size_t>(j)]) {
        keep = false;
      }
    }
    if (keep) acc += pmf_[idx];
  }
  return acc;
}

double CountDistribution::joint_at_most(const std::vector<int>& bounds) const {
  if (static_cast<int>(bounds.size()) != k_) {
    throw std::invalid_argument(
        "joint_at_most: one bound per threshold required");
  }
  double acc = 0.0;
  for (Eigen::Index idx = 0; idx < pmf_.size(); ++idx) {
    Eigen::Index rest = idx;
    bool keep = true;
    for (int j = 0; j < k_; ++j) {
      const int cj = static_cast<int>(rest % (n_ + 1));
      rest /= (n_ + 1);
      if (cj > bounds[static_cast<std::size_t>(j)]) keep = false;
    }
    if (keep) acc += pmf_[idx];
  }
  return acc;
}

double order_stat_cdf(const CiModel& model, int r, double x) {
  const int n = model.size();
  require_rank(r, n, "order_stat_cdf");
  Eigen::VectorXd thresholds(1);
  thresholds << x;
  const Eigen::VectorXd levels = threshold_levels(model, thresholds);
  return integrate_01(
      [&](double s) {
        return CountDistribution::from_probabilities(
                   conditional_probs(model, levels, s))
            .tail(r);
      },
      model.quadrature());
}

std::pair<double, double> extreme_cdfs(const CiModel& model, double x) {
  const int n = model.size();
  Eigen::VectorXd u(n);
  for (int i = 0; i < n; ++i) u[i] = cdf(model.component(i + 1).marginal, x);
  const double max_cdf = integrate_01(
      [&](double s) {
        double prod = 1.0;
        for (int i = 0; i < n; ++i) {
          prod *= hfunc(model.component(i + 1).copula, u[i], s);
        }
        return prod;
      },
      model.quadrature());
  const double min_cdf =
      1.0 - integrate_01(
                [&](double s) {
                  double prod = 1.0;
                  for (int i = 0; i < n; ++i) {
                    prod *= 1.0 - hfunc(model.component(i + 1).copula, u[i], s);
                  }
                  return prod;
                },
                model.quadrature());
  return {min_cdf, max_cdf};
}

double pair_order_stat_cdf(const CiModel& model, int r, int s, double x,
                           double y) {
  const int n = model.size();
  require_rank(r, n, "pair_order_stat_cdf");
  require_rank(s, n, "pair_order_stat_cdf");
  if (!(r < s)) {
    throw std::invalid_argument("pair_order_stat_cdf: requires r < s");
  }
  if (!(x <= y)) {
    throw std::invalid_argument("pair_order_stat_cdf: requires x <= y");
  }
  Eigen::VectorXd thresholds(2);
  thresholds << x, y;
  const Eigen::VectorXd levels = threshold_levels(model, thresholds);
  const std::vector<int> ranks{r, s};
  return integrate_01(
      [&](double t) {
        return CountDistribution::from_probabilities(
                   conditional_probs(model, levels, t))
            .joint_tail(ranks);
      },
      model.quadrature());
}

double joint_order_stat_cdf(const CiModel& model, const OrderStatQuery& query) {
  const int n = model.size();
  const int k = static_cast<int>(query.ranks.size());
  if (k < 1 || query.thresholds.size() != k) {
    throw std::invalid_argument(
        "joint_order_stat_cdf: ranks and thresholds must align, k >= 1");
  }
  for (int j = 0; j < k; ++j) {
    require_rank(query.ranks[static_cast<std::size_t>(j)], n,
                 "joint_order_stat_cdf");
    if (j > 0) {
      if (query.ranks[static_cast<std::size_t>(j)] <=
          query.ranks[static_cast<std::size_t>(j - 1)]) {
        throw std::invalid_argument(
            "joint_order_stat_cdf: ranks must be strictly increasing");
      }
      if (query.thresholds[j] < query.thresholds[j - 1]) {
        throw std::invalid_argument(
            "joint_order_stat_cdf: thresholds must be nondecreasing");
      }
    }
  }
  const Eigen::VectorXd levels = threshold_levels(model, query.thresholds);
  return integrate_01(
      [&](double s) {
        return CountDistribution::from_probabilities(
                   conditional_probs(model, levels, s))
            .joint_tail(query.ranks);
      },
      model.quadrature());
}

double order_stat_cdf_permanent(const CiModel& model, int r, double x) {
  const int n = model.size();
  require_rank(r, n, "order_stat_cdf_permanent");
  if (n > kPermanentComponentLimit) {
    throw NumericError("order_stat_cdf_permanent: n exceeds the limit of " +
                       std::to_string(kPermanentComponentLimit));
  }
  Eigen::VectorXd thresholds(1);
  thresholds << x;
  const Eigen::VectorXd levels = threshold_levels(model, thresholds);
  return integrate_01(
      [&](double s) {
        const Eigen::MatrixXd probs = conditional_probs(model, levels, s);
        const Eigen::RowVectorXd h = probs.col(0).transpose();
        const Eigen::RowVectorXd hc =
            Eigen::RowVectorXd::Ones(n) - h;
        double acc = 0.0;
        Eigen::MatrixXd m(n, n);
        for (int i = r; i <= n; ++i) {
          m.topRows(i) = h.replicate(i, 1);
          if (i < n) m.bottomRows(n - i) = hc.replicate(n - i, 1);
          acc += permanent(m) / (factorial(i) * factorial(n - i));
        }
        return acc;
      },
      model.quadrature());
}

double pair_order_stat_cdf_permanent(const CiModel& model, int r, int s,
                                     double x, double y) {
  const int n = model.size();
  require_rank(r, n, "pair_order_stat_cdf_permanent");
  require_rank(s, n, "pair_order_stat_cdf_permanent");
  if (!(r < s)) {
    throw std::invalid_argument(
        "pair_order_stat_cdf_permanent: requires r < s");
  }
  if (!(x <= y)) {
    throw std::invalid_argument(
        "pair_order_stat_cdf_permanent: requires x <= y");
  }
  if (n > kPermanentComponentLimit) {
    throw NumericError(
        "pair_order_stat_cdf_permanent: n exceeds the limit of " +
        std::to_string(kPermanentComponentLimit));
  }
  Eigen::VectorXd thresholds(2);
  thresholds << x, y;
  const Eigen::VectorXd levels = threshold_levels(model, thresholds);
  return integrate_01(
      [&](double t) {
        const Eigen::MatrixXd probs = conditional_probs(model, levels, t);
        const Eigen::RowVectorXd hx = probs.col(0).transpose();
        const Eigen::RowVectorXd hy = probs.col(1).transpose();
        const Eigen::RowVectorXd mid = hy - hx;
        const Eigen::RowVectorXd top = Eigen::RowVectorXd::Ones(n) - hy;
        double acc = 0.0;
        Eigen::MatrixXd mat(n, n);
        // i components at or below x, m in (x,y], the rest above y
        for (int i = r; i <= n; ++i) {
          for (int m = std::max(s - i, 0); m <= n - i; ++m) {
            mat.topRows(i) = hx.replicate(i, 1);
            if (m > 0) mat.middleRows(i, m) = mid.replicate(m, 1);
            if (n - i - m > 0) {
              mat.bottomRows(n - i - m) = top.replicate(n - i - m, 1);
            }
            acc += permanent(mat) /
                   (factorial(i) * factorial(m) * factorial(n - i - m));
          }
        }
        return acc;
      },
      model.quadrature());
}

double mean_residual_life(const CiModel& model, int k, int r, double t) {
  const int n = model.size();
  require_rank(k, n, "mean_residual_life");
  require_rank(r, n, "mean_residual_life");
  if (!(r < k)) {
    throw std::invalid_argument("mean_residual_life: requires r < k");
  }
  const double denom = 1.0 - order_stat_cdf(model, r, t);
  if (denom < 1e-12) {
    throw NumericError(
        "mean_residual_life: survival probability vanishes at t");
  }

  // widest-support reference component for the outer substitution u = Q(q)
  int ref = 1;
  double widest = -1.0;
  for (int i = 1; i <= n; ++i) {
    const double reach = quantile(model.component(i).marginal, 1.0 - 1e-9);
    if (reach > widest) {
      widest = reach;
      ref = i;
    }
  }
  const Marginal& ref_m = model.component(ref).marginal;
  const double qlo = cdf(ref_m, t);
  if (qlo >= 1.0) return 0.0;

  const std::vector<int> bounds{r - 1, k - 1};
  const auto joint_survival = [&](double u) {
    Eigen::VectorXd thresholds(2);
    thresholds << t, u;
    const Eigen::VectorXd levels = threshold_levels(model, thresholds);
    return integrate_01(
        [&](double s) {
          return CountDistribution::from_probabilities(
                     conditional_probs(model, levels, s))
              .joint_at_most(bounds);
        },
        model.quadrature());
  };
  const double numer = integrate(
      [&](double q) {
        const double u = quantile(ref_m, q);
        return joint_survival(u) / pdf(ref_m, u);
      },
      model.quadrature(), qlo, 1.0);
  return numer / denom;
}

}  // namespace cicop
