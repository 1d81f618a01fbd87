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

#ifndef CICOP_MODEL_IO_HPP_
#define CICOP_MODEL_IO_HPP_

#include <optional>
#include <string>

#include "cicop/model.hpp"

namespace cicop {

// Model file schema (JSON):
//   {
//     "z": {"marginal": {"family": "uniform01"}},
//     "components": [
//       {"marginal": {"family": "power", "k": 2.0},
//        "copula":   {"family": "fgm", "alpha": -1.0}},
//       ...
//     ],
//     "quadrature_order": 64            // optional
//   }
// Marginal families: uniform01 | power (k) | exponential (lambda).
// Copula families: independence | fgm (alpha) | clayton (theta).

/// Parses a model description. Malformed text, unknown families and
/// out-of-range parameters raise ValidationError with a position or a
/// field path. quad_order, when set, overrides the file's value.
CiModel parse_model(const std::string& text, const std::string& origin,
                    std::optional<int> quad_order = std::nullopt);

/// parse_model on the contents of a file.
CiModel load_model(const std::string& path,
                   std::optional<int> quad_order = std::nullopt);

}  // namespace cicop

#endif  // CICOP_MODEL_IO_HPP_
