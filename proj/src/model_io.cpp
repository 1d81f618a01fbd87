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

#include "cicop/model_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cicop/errors.hpp"

namespace cicop {

namespace {

using nlohmann::json;

double number_field(const json& node, const std::string& key,
                    const std::string& path) {
  if (!node.contains(key) || !node[key].is_number()) {
    throw ValidationError(path + ": missing numeric field \"" + key + "\"");
  }
  return node[key].get<double>();
}

std::string family_field(const json& node, const std::string& path) {
  if (!node.is_object() || !node.contains("family") ||
      !node["family"].is_string()) {
    throw ValidationError(path + ": expected an object with a \"family\" name");
  }
  return node["family"].get<std::string>();
}

Marginal parse_marginal(const json& node, const std::string& path) {
  const std::string family = family_field(node, path);
  try {
    if (family == "uniform01") return Marginal::uniform01();
    if (family == "power") return Marginal::power(number_field(node, "k", path));
    if (family == "exponential") {
      return Marginal::exponential(number_field(node, "lambda", path));
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError(path + ": " + e.what());
  }
  throw ValidationError(path + ": unknown marginal family \"" + family + "\"");
}

BivariateCopula parse_copula(const json& node, const std::string& path) {
  const std::string family = family_field(node, path);
  try {
    if (family == "independence") return BivariateCopula::independence();
    if (family == "fgm") {
      return BivariateCopula::fgm(number_field(node, "alpha", path));
    }
    if (family == "clayton") {
      return BivariateCopula::clayton(number_field(node, "theta", path));
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError(path + ": " + e.what());
  }
  throw ValidationError(path + ": unknown copula family \"" + family + "\"");
}

}  // namespace

CiModel parse_model(const std::string& text, const std::string& origin,
                    std::optional<int> quad_order) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(origin + ": " + e.what());
  }
  if (!root.is_object()) {
    throw ValidationError(origin + ": top level must be an object");
  }
  if (!root.contains("z") || !root["z"].is_object() ||
      !root["z"].contains("marginal")) {
    throw ValidationError(origin + ": missing z.marginal");
  }
  const Marginal z = parse_marginal(root["z"]["marginal"], "z.marginal");

  if (!root.contains("components") || !root["components"].is_array()) {
    throw ValidationError(origin + ": missing components array");
  }
  const json& comps = root["components"];
  if (comps.empty()) {
    throw ValidationError(origin + ": model requires at least one component");
  }
  std::vector<Component> components;
  components.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "components[" + std::to_string(i) + "]";
    const json& entry = comps[i];
    if (!entry.is_object() || !entry.contains("marginal") ||
        !entry.contains("copula")) {
      throw ValidationError(path + ": expected marginal and copula objects");
    }
    components.push_back({parse_copula(entry["copula"], path + ".copula"),
                          parse_marginal(entry["marginal"], path + ".marginal")});
  }

  int order = 64;
  if (root.contains("quadrature_order")) {
    if (!root["quadrature_order"].is_number_integer()) {
      throw ValidationError(origin + ": quadrature_order must be an integer");
    }
    order = root["quadrature_order"].get<int>();
  }
  if (quad_order) order = *quad_order;
  if (order < 1 || order > 512) {
    throw ValidationError(origin + ": quadrature_order must lie in [1,512]");
  }
  return CiModel(std::move(components), z, order);
}

CiModel load_model(const std::string& path, std::optional<int> quad_order) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError(path + ": cannot open model file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), path, quad_order);
}

}  // namespace cicop
