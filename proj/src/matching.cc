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

#include "msls/matching.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "msls/common.h"

namespace msls {

WeightedBipartiteGraph WeightedBipartiteGraph::FromRows(
    const std::vector<std::vector<double>>& rows, int right_size) {
  if (right_size < 0) throw ValidationError("negative right side size");
  WeightedBipartiteGraph g;
  g.left_size = static_cast<int>(rows.size());
  g.right_size = right_size;
  g.weights.reserve(rows.size() * static_cast<std::size_t>(right_size));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != right_size) {
      throw ValidationError("weight row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(right_size));
    }
    for (double w : rows[i]) {
      if (!std::isfinite(w)) throw ValidationError("non-finite edge weight");
      g.weights.push_back(w);
    }
  }
  return g;
}

namespace {

// Minimum-cost assignment of every row to a distinct column (rows <= cols)
// by successive shortest augmenting paths with potentials. cost is
// row-major rows x cols. Returns the column of each row.
std::vector<int> SolveAssignment(const std::vector<double>& cost, int rows,
                                 int cols) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based; column 0 is the virtual source.
  std::vector<double> u(rows + 1, 0.0);
  std::vector<double> v(cols + 1, 0.0);
  std::vector<int> owner(cols + 1, 0);
  std::vector<int> way(cols + 1, 0);
  for (int row = 1; row <= rows; ++row) {
    owner[0] = row;
    int col0 = 0;
    std::vector<double> min_slack(cols + 1, kInf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[col0] = 1;
      const int r0 = owner[col0];
      double delta = kInf;
      int col1 = 0;
      for (int col = 1; col <= cols; ++col) {
        if (used[col]) continue;
        const double reduced =
            cost[static_cast<std::size_t>(r0 - 1) * cols + (col - 1)] - u[r0] -
            v[col];
        if (reduced < min_slack[col]) {
          min_slack[col] = reduced;
          way[col] = col0;
        }
        if (min_slack[col] < delta) {
          delta = min_slack[col];
          col1 = col;
        }
      }
      for (int col = 0; col <= cols; ++col) {
        if (used[col]) {
          u[owner[col]] += delta;
          v[col] -= delta;
        } else {
          min_slack[col] -= delta;
        }
      }
      col0 = col1;
    } while (owner[col0] != 0);
    do {
      const int col1 = way[col0];
      owner[col0] = owner[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<int> assignment(rows, -1);
  for (int col = 1; col <= cols; ++col) {
    if (owner[col] != 0) assignment[owner[col] - 1] = col - 1;
  }
  return assignment;
}

// Any maximum-weight matching with exactly k edges, 0 <= k <= min sides.
Matching SolveK(const WeightedBipartiteGraph& g, int k) {
  Matching result;
  if (k == 0) return result;

  const int rows = g.left_size;
  const int dummies = g.left_size - k;
  const int cols = g.right_size + dummies;
  const double dummy_weight = *std::max_element(g.weights.begin(), g.weights.end());
  std::vector<double> cost(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double w = j < g.right_size ? g.weight(i, j) : dummy_weight;
      cost[static_cast<std::size_t>(i) * cols + j] = -w;
    }
  }
  const std::vector<int> assignment = SolveAssignment(cost, rows, cols);

  std::vector<std::pair<int, int>> real;
  for (int i = 0; i < rows; ++i) {
    if (assignment[i] < g.right_size) real.emplace_back(i, assignment[i]);
  }
  // The assignment can leave dummies unused only when the extra real edges
  // all carry the maximum weight, so any k of them are optimal.
  if (static_cast<int>(real.size()) > k) {
    std::stable_sort(real.begin(), real.end(), [&g](const auto& a, const auto& b) {
      return g.weight(a.first, a.second) > g.weight(b.first, b.second);
    });
    real.resize(k);
  }
  if (static_cast<int>(real.size()) != k) {
    throw InvariantError("assignment produced fewer than k real edges");
  }
  std::sort(real.begin(), real.end());
  for (const auto& [i, j] : real) result.total_weight += g.weight(i, j);
  result.pairs = std::move(real);
  return result;
}

// Restriction of g to rows after `row` and to the columns not in `taken`.
WeightedBipartiteGraph Residual(const WeightedBipartiteGraph& g, int row,
                                const std::vector<char>& taken) {
  WeightedBipartiteGraph sub;
  sub.left_size = g.left_size - row - 1;
  for (int c = 0; c < g.right_size; ++c) sub.right_size += taken[c] ? 0 : 1;
  for (int i = row + 1; i < g.left_size; ++i) {
    for (int c = 0; c < g.right_size; ++c) {
      if (!taken[c]) sub.weights.push_back(g.weight(i, c));
    }
  }
  return sub;
}

}  // namespace

Matching MaxWeightMatchingK(const WeightedBipartiteGraph& g, int k) {
  if (k < 0 || k > std::min(g.left_size, g.right_size)) {
    throw PreconditionError("matching cardinality " + std::to_string(k) +
                            " outside [0, " +
                            std::to_string(std::min(g.left_size, g.right_size)) +
                            "]");
  }
  if (k == 0) return {};
  const Matching any = SolveK(g, k);
  const double target = any.total_weight;

  // Among optimal matchings pick the lexicographically smallest pair list:
  // fix pairs row by row, keeping a pair only if the rows below can still
  // complete an optimal matching.
  const Tolerance tol;
  Matching lex;
  std::vector<char> taken(g.right_size, 0);
  int free_cols = g.right_size;
  for (int row = 0; row < g.left_size; ++row) {
    const int need = k - static_cast<int>(lex.pairs.size());
    if (need == 0) break;
    for (int c = 0; c < g.right_size; ++c) {
      if (taken[c]) continue;
      if (need - 1 > std::min(g.left_size - row - 1, free_cols - 1)) break;
      taken[c] = 1;
      double rest = 0.0;
      if (need > 1) rest = SolveK(Residual(g, row, taken), need - 1).total_weight;
      const double total = lex.total_weight + g.weight(row, c) + rest;
      if (tol.Near(total, target)) {
        lex.pairs.emplace_back(row, c);
        lex.total_weight += g.weight(row, c);
        --free_cols;
        break;
      }
      taken[c] = 0;
    }
  }
  if (static_cast<int>(lex.pairs.size()) != k) return any;
  return lex;
}

}  // namespace msls
