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

#ifndef CICOP_ORDERSTATS_HPP_
#define CICOP_ORDERSTATS_HPP_

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "cicop/model.hpp"

namespace cicop {

/// Ranks r_1 < ... < r_k with nondecreasing thresholds x_1 <= ... <= x_k;
/// queries P{X_{r_1:n} <= x_1, ..., X_{r_k:n} <= x_k}.
struct OrderStatQuery {
  std::vector<int> ranks;
  Eigen::VectorXd thresholds;
};

/// Joint distribution of the threshold-crossing counts
/// c_j = #{i : X_i <= x_j} for independent components with per-threshold
/// success probabilities probs(i, j). Built by the add-one-component
/// recurrence (the Poisson-binomial distribution when k = 1).
class CountDistribution {
 public:
  /// probs is n x k with entries in [0,1], nondecreasing along each row.
  static CountDistribution from_probabilities(const Eigen::MatrixXd& probs);

  int trials() const { return n_; }
  int thresholds() const { return k_; }

  double pmf(const std::vector<int>& counts) const;
  double total() const { return pmf_.sum(); }

  /// P{N >= r} for the single-threshold case.
  double tail(int r) const;
  /// P{c_j >= ranks[j] for all j}.
  double joint_tail(const std::vector<int>& ranks) const;
  /// P{c_j <= bounds[j] for all j}.
  double joint_at_most(const std::vector<int>& bounds) const;

 private:
  CountDistribution(int n, int k, Eigen::VectorXd pmf);

  std::size_t index(const std::vector<int>& counts) const;

  int n_ = 0;
  int k_ = 0;
  Eigen::VectorXd pmf_;  // flattened over (c_1..c_k), stride (n+1)^j
};

/// P{X_{r:n} <= x}: w-quadrature of the conditional count tail P{N >= r}.
double order_stat_cdf(const CiModel& model, int r, double x);

/// (min cdf, max cdf) = (P{X_{1:n} <= x}, P{X_{n:n} <= x}) by the direct
/// product formulas; equal to order_stat_cdf at ranks 1 and n.
std::pair<double, double> extreme_cdfs(const CiModel& model, double x);

/// P{X_{r:n} <= x, X_{s:n} <= y} for r < s, x <= y via the two-threshold
/// count distribution.
double pair_order_stat_cdf(const CiModel& model, int r, int s, double x,
                           double y);

/// General k-subset joint cdf via the k-threshold count distribution.
/// Reduces to order_stat_cdf (k = 1) and pair_order_stat_cdf (k = 2).
double joint_order_stat_cdf(const CiModel& model, const OrderStatQuery& query);

/// Permanent-route cross-check of order_stat_cdf: per quadrature node,
/// permanents of the block matrix with i conditional-cdf rows and n-i
/// complement rows, weighted by 1/(i!(n-i)!). Requires n <= 12.
double order_stat_cdf_permanent(const CiModel& model, int r, double x);

/// Permanent-route cross-check of pair_order_stat_cdf with row blocks
/// (h(x), h(y)-h(x), 1-h(y)) and multinomial weights. Requires n <= 12.
double pair_order_stat_cdf_permanent(const CiModel& model, int r, int s,
                                     double x, double y);

/// Mean residual life E{X_{k:n} - t | X_{r:n} > t} for r < k: the joint
/// survival from the two-threshold counts, integrated over u > t through
/// the quantile of the widest-support component.
double mean_residual_life(const CiModel& model, int k, int r, double t);

}  // namespace cicop

#endif  // CICOP_ORDERSTATS_HPP_
