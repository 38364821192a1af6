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

#ifndef MSLS_MATROID_H_
#define MSLS_MATROID_H_

#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "msls/common.h"

namespace msls {

enum class MatroidKind { kUniform, kPartition, kGraphic };

std::string_view MatroidKindName(MatroidKind kind);

// Pairs (i, g(i)) with i in S\T, g(i) in T\S, such that S - i + g(i) is
// independent for every pair.
struct ExchangeBijection {
  std::vector<std::pair<int, int>> pairs;
};

// Uniform, partition and graphic matroids over {0, ..., n-1}. Rank and the
// smallest circuit size are computed at construction. Immutable.
class Matroid {
 public:
  struct Uniform {
    int rank = 0;
  };
  struct Partition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> caps;
    std::vector<int> block_of;  // element -> block index
  };
  // Element e is the edge edges[e]; self-loops and parallel edges allowed.
  struct Graphic {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
  };
  using Payload = std::variant<Uniform, Partition, Graphic>;

  static Matroid MakeUniform(int n, int rank);
  // Blocks must partition {0, ..., n-1}; caps are non-negative.
  static Matroid MakePartition(std::vector<std::vector<int>> blocks,
                               std::vector<int> caps);
  static Matroid MakeGraphic(int vertices,
                             std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  MatroidKind kind() const;
  const Payload& payload() const { return payload_; }

  bool IsIndependent(SubsetMask s) const;
  int rank() const { return rank_; }
  // Size of a maximal independent subset of S, by ascending greedy.
  int RankOf(SubsetMask s) const;
  // Smallest circuit size; nullopt when every subset is independent.
  std::optional<int> min_circuit_size() const { return min_circuit_; }

  // Base containing S, grown by ascending greedy insertion. Throws
  // PreconditionError when S is dependent.
  SubsetMask ExtendToBase(SubsetMask s) const;
  bool IsBase(SubsetMask s) const;

  // Exchange pairing between bases S and T via augmenting-path matching on
  // {(i, j) : S - i + j independent}. Throws PreconditionError if S or T is
  // not a base and InvariantError if no perfect matching exists.
  ExchangeBijection ExchangeBijectionBetween(SubsetMask s, SubsetMask t) const;

 private:
  Matroid(int n, Payload payload);
  int ComputeMinCircuit() const;

  int n_;
  Payload payload_;
  int rank_ = 0;
  std::optional<int> min_circuit_;
};

// Checks that every pair satisfies the exchange predicate and that the pairs
// form a bijection S\T -> T\S.
bool IsValidExchange(const Matroid& m, SubsetMask s, SubsetMask t,
                     const ExchangeBijection& g);

}  // namespace msls

#endif  // MSLS_MATROID_H_
