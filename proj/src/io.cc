// Copyright 2026 The msls Authors.
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

#include "msls/io.h"

#include <cstdio>
#include <utility>
#include <vector>

#include "msls/metric.h"

namespace msls {
namespace {

const Json& Field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

template <typename T>
T As(const Json& value, const std::string& where) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

int AsInt(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw ValidationError(where + ": expected an integer");
  }
  return value.get<int>();
}

}  // namespace

SetFunctionPtr BuildFunction(const Json& spec) {
  const std::string kind = As<std::string>(Field(spec, "kind", "function"),
                                           "function.kind");
  if (kind == "diversity") {
    DistanceMatrix distance = DistanceMatrix::Zero(1);
    if (spec.contains("distance")) {
      distance = DistanceMatrix::FromRows(As<std::vector<std::vector<double>>>(
          spec.at("distance"), "function.distance"));
    } else if (spec.contains("js_distributions")) {
      distance = JsDivergenceMatrix(As<std::vector<std::vector<double>>>(
          spec.at("js_distributions"), "function.js_distributions"));
    } else {
      throw ValidationError(
          "function: diversity needs 'distance' or 'js_distributions'");
    }
    std::optional<std::vector<double>> modular;
    if (spec.contains("modular")) {
      modular = As<std::vector<double>>(spec.at("modular"), "function.modular");
    }
    return BuildDiversity(std::move(distance), std::move(modular));
  }
  if (kind == "coverage") {
    return BuildCoverage(
        As<std::vector<std::vector<int>>>(Field(spec, "incidence", "function"),
                                          "function.incidence"),
        As<std::vector<double>>(Field(spec, "weights", "function"),
                                "function.weights"));
  }
  if (kind == "table") {
    return BuildTable(As<std::vector<double>>(Field(spec, "values", "function"),
                                              "function.values"));
  }
  if (kind == "weighted_sum") {
    const Json& comps = Field(spec, "components", "function");
    if (!comps.is_array()) {
      throw ValidationError("function.components: expected an array");
    }
    std::vector<std::pair<SetFunctionPtr, double>> parts;
    for (const Json& c : comps) {
      parts.emplace_back(
          BuildFunction(Field(c, "function", "component")),
          As<double>(Field(c, "coefficient", "component"),
                     "component.coefficient"));
    }
    return BuildWeightedSum(std::move(parts));
  }
  throw ValidationError("function: unknown kind '" + kind + "'");
}

Matroid BuildMatroid(const Json& spec, int n) {
  const std::string kind =
      As<std::string>(Field(spec, "kind", "matroid"), "matroid.kind");
  if (kind == "uniform") {
    return Matroid::MakeUniform(n, AsInt(Field(spec, "r", "matroid"),
                                         "matroid.r"));
  }
  if (kind == "partition") {
    return Matroid::MakePartition(
        As<std::vector<std::vector<int>>>(Field(spec, "blocks", "matroid"),
                                          "matroid.blocks"),
        As<std::vector<int>>(Field(spec, "caps", "matroid"), "matroid.caps"));
  }
  if (kind == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : As<std::vector<std::vector<int>>>(
             Field(spec, "edges", "matroid"), "matroid.edges")) {
      if (e.size() != 2) {
        throw ValidationError("matroid.edges: each edge needs two endpoints");
      }
      edges.emplace_back(e[0], e[1]);
    }
    return Matroid::MakeGraphic(
        AsInt(Field(spec, "vertices", "matroid"), "matroid.vertices"),
        std::move(edges));
  }
  throw ValidationError("matroid: unknown kind '" + kind + "'");
}

Instance ParseInstance(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("instance must be an object");
  Instance inst;
  inst.n = AsInt(Field(doc, "n", "instance"), "instance.n");
  GroundSet::Of(inst.n);
  inst.function_spec = Field(doc, "function", "instance");
  inst.matroid_spec = Field(doc, "matroid", "instance");
  inst.function = BuildFunction(inst.function_spec);
  if (inst.function->n() != inst.n) {
    throw ValidationError("function has ground set " +
                          std::to_string(inst.function->n()) +
                          " but instance declares n = " +
                          std::to_string(inst.n));
  }
  inst.matroid = BuildMatroid(inst.matroid_spec, inst.n);
  if (inst.matroid.n() != inst.n) {
    throw ValidationError("matroid has ground set " +
                          std::to_string(inst.matroid.n()) +
                          " but instance declares n = " +
                          std::to_string(inst.n));
  }
  if (doc.contains("metadata")) {
    inst.metadata = doc.at("metadata");
    if (!inst.metadata.is_object()) {
      throw ValidationError("instance.metadata must be an object");
    }
  }
  return inst;
}

Instance ParseInstanceText(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("instance is not valid JSON: ") +
                          e.what());
  }
  return ParseInstance(doc);
}

Json SerializeInstance(const Instance& instance) {
  Json doc = Json::object();
  doc["n"] = instance.n;
  doc["function"] = instance.function_spec;
  doc["matroid"] = instance.matroid_spec;
  doc["metadata"] = instance.metadata;
  return doc;
}

std::string Digest(const Json& doc) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : doc.dump()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

Json MaskToJson(SubsetMask s) { return Json(s.Elements()); }

}  // namespace msls
