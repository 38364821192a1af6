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

#include "msls/gen.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace msls {

const std::vector<std::string>& GeneratorKinds() {
  static const std::vector<std::string> kinds = {
      "metric-random", "semimetric-power", "negtype-sqeuclid", "js-random",
      "coverage-random"};
  return kinds;
}

std::vector<std::vector<double>> PowerDistances(
    const std::vector<std::vector<double>>& points, double power) {
  const std::size_t n = points.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        const double diff = points[i][k] - points[j][k];
        sq += diff * diff;
      }
      const double v = power == 2.0 ? sq : std::pow(std::sqrt(sq), power);
      d[i][j] = v;
      d[j][i] = v;
    }
  }
  return d;
}

namespace {

std::vector<std::vector<double>> RandomPoints(int n, int dim,
                                              std::mt19937_64& rng) {
  std::vector<std::vector<double>> points(n, std::vector<double>(dim));
  for (auto& p : points) {
    for (double& v : p) v = UnitDouble(rng);
  }
  return points;
}

std::vector<double> Dirichlet1(int support, std::mt19937_64& rng) {
  std::vector<double> p(support);
  double total = 0.0;
  for (double& v : p) {
    // Exponential(1) draws; 1 - u keeps the argument of log positive.
    v = -std::log(1.0 - UnitDouble(rng));
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

uint64_t Below(uint64_t bound, std::mt19937_64& rng) { return rng() % bound; }

Json GraphicSpec(int n, std::mt19937_64& rng) {
  const int vertices = n / 2 + 2;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> used;
  // Random spanning tree: attach each vertex to an earlier one.
  for (int v = 1; v < vertices; ++v) {
    const int u = static_cast<int>(Below(v, rng));
    edges.emplace_back(u, v);
    used.insert({u, v});
  }
  while (static_cast<int>(edges.size()) < n) {
    int a = static_cast<int>(Below(vertices, rng));
    int b = static_cast<int>(Below(vertices, rng));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) continue;
    edges.emplace_back(a, b);
  }
  for (std::size_t k = edges.size(); k > 1; --k) {
    std::swap(edges[k - 1], edges[Below(k, rng)]);
  }
  Json e = Json::array();
  for (const auto& [a, b] : edges) e.push_back({a, b});
  return {{"kind", "graphic"}, {"vertices", vertices}, {"edges", e}};
}

Json MatroidSpec(const GenParams& p, std::mt19937_64& rng) {
  const int rank = p.rank > 0 ? p.rank : std::max(2, p.n / 3);
  if (p.matroid == "uniform") {
    return {{"kind", "uniform"}, {"r", std::min(rank, p.n)}};
  }
  if (p.matroid == "partition") {
    if (p.blocks < 1 || p.blocks > p.n) {
      throw ValidationError("blocks must lie in [1, n]");
    }
    std::vector<std::vector<int>> blocks(p.blocks);
    for (int e = 0; e < p.n; ++e) blocks[e % p.blocks].push_back(e);
    std::vector<int> caps(p.blocks);
    for (int b = 0; b < p.blocks; ++b) {
      caps[b] = std::min<int>(blocks[b].size(),
                              std::max(1, (rank + p.blocks - 1) / p.blocks));
    }
    return {{"kind", "partition"}, {"blocks", blocks}, {"caps", caps}};
  }
  if (p.matroid == "graphic") return GraphicSpec(p.n, rng);
  throw ValidationError("unknown matroid kind '" + p.matroid +
                        "'; expected uniform, partition or graphic");
}

}  // namespace

Instance Generate(const GenParams& p) {
  if (p.n < 2 || p.n > kMaxGroundSet) {
    throw ValidationError("generated instances need 2 <= n <= " +
                          std::to_string(kMaxGroundSet));
  }
  if (p.dim < 1) throw ValidationError("dim must be >= 1");
  std::mt19937_64 rng(p.seed);
  Json function;
  Json metadata = {{"generator", p.kind}, {"seed", p.seed}};

  if (p.kind == "metric-random" || p.kind == "semimetric-power" ||
      p.kind == "negtype-sqeuclid") {
    double power = 1.0;
    if (p.kind == "semimetric-power") {
      if (!(p.power >= 1.0) || !std::isfinite(p.power)) {
        throw ValidationError("power must be a finite number >= 1");
      }
      power = p.power;
    } else if (p.kind == "negtype-sqeuclid") {
      power = 2.0;
    }
    const auto points = RandomPoints(p.n, p.dim, rng);
    function = {{"kind", "diversity"},
                {"distance", PowerDistances(points, power)}};
    metadata["dim"] = p.dim;
    metadata["power"] = power;
    metadata["declared_sigma"] = std::exp2(power - 1.0);
  } else if (p.kind == "js-random") {
    std::vector<std::vector<double>> dists;
    const int support = p.support > 0 ? p.support
                                      : 4 + static_cast<int>(Below(2, rng));
    for (int i = 0; i < p.n; ++i) dists.push_back(Dirichlet1(support, rng));
    function = {{"kind", "diversity"}, {"js_distributions", dists}};
    metadata["support"] = support;
    metadata["declared_sigma"] = 2.0;
  } else if (p.kind == "coverage-random") {
    const int universe = p.universe > 0 ? p.universe : 2 * p.n;
    std::vector<std::vector<int>> incidence(p.n);
    for (int e = 0; e < p.n; ++e) {
      for (int u = 0; u < universe; ++u) {
        if (UnitDouble(rng) < p.coverage_probability) incidence[e].push_back(u);
      }
      if (incidence[e].empty()) {
        incidence[e].push_back(static_cast<int>(Below(universe, rng)));
      }
    }
    std::vector<double> weights(universe);
    for (double& w : weights) w = 0.5 + UnitDouble(rng);
    function = {{"kind", "coverage"},
                {"incidence", incidence},
                {"weights", weights}};
    metadata["universe"] = universe;
  } else {
    throw ValidationError("unknown generator '" + p.kind + "'");
  }

  if (p.modular) {
    if (function["kind"] != "diversity") {
      throw ValidationError("modular weights apply to diversity generators");
    }
    std::vector<double> g(p.n);
    for (double& v : g) v = UnitDouble(rng);
    function["modular"] = g;
  }

  Json doc = {{"n", p.n},
              {"function", function},
              {"matroid", MatroidSpec(p, rng)},
              {"metadata", metadata}};
  return ParseInstance(doc);
}

}  // namespace msls
