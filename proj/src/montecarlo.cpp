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

#include "cicop/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cicop {

namespace {

// SplitMix64 output function, also used statelessly to hash row indices.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    return mix64(state);
  }

  // uniform on the open interval (0,1)
  double next_u01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }
};

SplitMix64 row_rng(std::uint64_t seed, std::uint64_t row) {
  // decorrelate per-row streams by hashing the row index through the
  // finalizer before seeding
  return SplitMix64{mix64(seed ^ mix64(row * 0x9E3779B97F4A7C15ULL +
                                       0xD1B54A32D192ED03ULL))};
}

}  // namespace

SampleBatch sample(const CiModel& model, int count, std::uint64_t seed) {
  if (count < 1) {
    throw std::invalid_argument("sample: count must be >= 1");
  }
  const int n = model.size();
  SampleBatch batch;
  batch.seed = seed;
  batch.data.resize(count, n + 1);
  for (int row = 0; row < count; ++row) {
    SplitMix64 rng = row_rng(seed, static_cast<std::uint64_t>(row));
    const double w = rng.next_u01();
    for (int i = 0; i < n; ++i) {
      const Component& c = model.component(i + 1);
      const double v = rng.next_u01();
      const double u = hfunc_inverse(c.copula, v, w);
      batch.data(row, i) = quantile(c.marginal, u);
    }
    batch.data(row, n) = quantile(model.z_marginal(), w);
  }
  return batch;
}

double empirical_cdf(const SampleBatch& batch, int column, double x) {
  if (column < 1 || column > batch.components() + 1) {
    throw std::invalid_argument("empirical_cdf: column out of range");
  }
  const auto col = batch.data.col(column - 1);
  Eigen::Index hits = 0;
  for (Eigen::Index row = 0; row < col.size(); ++row) {
    if (col[row] <= x) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(col.size());
}

double empirical_order_stat_cdf(const SampleBatch& batch, int r, double x) {
  const int n = batch.components();
  if (r < 1 || r > n) {
    throw std::invalid_argument("empirical_order_stat_cdf: rank out of range");
  }
  Eigen::Index hits = 0;
  for (Eigen::Index row = 0; row < batch.data.rows(); ++row) {
    int below = 0;
    for (int i = 0; i < n; ++i) {
      if (batch.data(row, i) <= x) ++below;
    }
    if (below >= r) ++hits;  // r-th smallest <= x
  }
  return static_cast<double>(hits) / static_cast<double>(batch.data.rows());
}

KsResult ks_check(const Eigen::VectorXd& values,
                  const std::function<double(double)>& cdf) {
  const Eigen::Index count = values.size();
  if (count < 1000) {
    throw std::invalid_argument("ks_check: need at least 1000 samples");
  }
  std::vector<double> sorted(values.data(), values.data() + count);
  std::sort(sorted.begin(), sorted.end());

  KsResult result;
  result.threshold = 1.63 / std::sqrt(static_cast<double>(count));
  const double lo = sorted.front(), hi = sorted.back();
  for (int g = 0; g < 201; ++g) {
    const double x = lo + (hi - lo) * g / 200.0;
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
    const double ecdf = static_cast<double>(it - sorted.begin()) /
                        static_cast<double>(count);
    result.statistic = std::max(result.statistic, std::abs(ecdf - cdf(x)));
  }
  result.pass = result.statistic <= result.threshold;
  return result;
}

}  // namespace cicop
