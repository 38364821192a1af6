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

// JSON instance documents.
//
//   {
//     "n": 6,
//     "function": {"kind": "diversity", "distance": [[...]], "modular": [...]}
//               | {"kind": "diversity", "js_distributions": [[...]]}
//               | {"kind": "coverage", "incidence": [[...]], "weights": [...]}
//               | {"kind": "table", "values": [...]}
//               | {"kind": "weighted_sum",
//                  "components": [{"coefficient": c, "function": {...}}]},
//     "matroid": {"kind": "uniform", "r": 3}
//              | {"kind": "partition", "blocks": [[...]], "caps": [...]}
//              | {"kind": "graphic", "vertices": 4, "edges": [[u, v], ...]},
//     "metadata": {...}
//   }

#ifndef MSLS_IO_H_
#define MSLS_IO_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "msls/matroid.h"
#include "msls/setfn.h"

namespace msls {

using Json = nlohmann::json;

struct Instance {
  int n = 0;
  SetFunctionPtr function;
  Matroid matroid = Matroid::MakeUniform(1, 1);
  // Descriptors exactly as they will be serialized.
  Json function_spec;
  Json matroid_spec;
  Json metadata = Json::object();
};

// Builds a set function from its descriptor; ValidationError on any
// malformed or inconsistent field.
SetFunctionPtr BuildFunction(const Json& spec);
Matroid BuildMatroid(const Json& spec, int n);

Instance ParseInstance(const Json& doc);
Instance ParseInstanceText(std::string_view text);
Json SerializeInstance(const Instance& instance);

// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string Digest(const Json& doc);

// Subsets as sorted element lists.
Json MaskToJson(SubsetMask s);

}  // namespace msls

#endif  // MSLS_IO_H_
