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

#ifndef CICOP_MARGINALS_HPP_
#define CICOP_MARGINALS_HPP_

#include <string>

namespace cicop {

enum class MarginalFamily { Uniform01, Power, Exponential };

/// Absolutely continuous univariate marginal with closed-form cdf, pdf and
/// quantile. Power(k) has F(x) = x^k on [0,1]; Exponential(rate) lives on
/// [0,inf).
struct Marginal {
  MarginalFamily family = MarginalFamily::Uniform01;
  double param = 0.0;  // k for Power, rate for Exponential

  static Marginal uniform01();
  static Marginal power(double k);          // k > 0
  static Marginal exponential(double rate); // rate > 0
};

std::string family_name(MarginalFamily family);

double cdf(const Marginal& m, double x);       // clamps to 0/1 outside support
double pdf(const Marginal& m, double x);       // 0 outside support
double quantile(const Marginal& m, double p);  // inf{x : F(x) >= p}

double lower_bound(const Marginal& m);
double upper_bound(const Marginal& m);  // +inf for unbounded support

}  // namespace cicop

#endif  // CICOP_MARGINALS_HPP_
