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

#ifndef CICOP_MONTECARLO_HPP_
#define CICOP_MONTECARLO_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "cicop/model.hpp"

namespace cicop {

/// Seeded batch of draws. data has one row per draw and n+1 columns
/// (X_1..X_n, Z). Identical (model, seed, count) yields a bit-identical
/// batch; each row's randomness derives only from (seed, row index), so
/// generation order is immaterial.
struct SampleBatch {
  std::uint64_t seed = 0;
  Eigen::MatrixXd data;

  int count() const { return static_cast<int>(data.rows()); }
  int components() const { return static_cast<int>(data.cols()) - 1; }
};

/// Conditional inverse sampling: per row draw the latent uniform W, then
/// U_i = h_i^-1(V_i, W) for independent uniforms V_i, and map through the
/// quantiles. Exact, rejection-free.
SampleBatch sample(const CiModel& model, int count, std::uint64_t seed);

/// Fraction of rows with column value <= x. Columns are 1-based;
/// column n+1 is Z.
double empirical_cdf(const SampleBatch& batch, int column, double x);

/// Fraction of rows whose r-th smallest X value is <= x.
double empirical_order_stat_cdf(const SampleBatch& batch, int r, double x);

/// Kolmogorov-Smirnov comparison of a sample against an analytic cdf on a
/// 201-point grid spanning the sample range. Pass threshold 1.63/sqrt(count)
/// (asymptotic alpha ~ 0.01). Requires count >= 1000.
struct KsResult {
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

KsResult ks_check(const Eigen::VectorXd& values,
                  const std::function<double(double)>& cdf);

}  // namespace cicop

#endif  // CICOP_MONTECARLO_HPP_
