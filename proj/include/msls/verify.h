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

// Randomized property suites over generated instances, each checked against
// an exhaustive oracle.
//
//   lemmas      identity and inequality bundle of VerifyLemmas
//   smoothness  expectation inequality and one-sided smoothness
//   matching    Hungarian exact-k matching versus enumeration
//   matroid     matroid axioms, rank, circuits and exchange pairings
//   ratios      end-to-end solve versus the brute-force optimum

#ifndef MSLS_VERIFY_H_
#define MSLS_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msls/common.h"
#include "msls/matching.h"
#include "msls/matroid.h"

namespace msls {

struct PropertyOutcome {
  std::string name;
  int64_t checked = 0;
  int64_t failed = 0;
  int64_t skipped = 0;
  // Smallest normalized slack seen (negative when violated).
  double worst_slack = 0.0;
  std::string witness;

  bool passed() const { return failed == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyOutcome> properties;

  bool passed() const;
};

struct VerifyOptions {
  std::vector<int> sizes;  // empty: suite default
  int count = 10;          // instances per size
  uint64_t seed = 0;
  int samples = 20;
  double epsilon = 0.1;
  Tolerance tolerance;
};

const std::vector<std::string>& SuiteNames();

// Throws ValidationError for an unknown suite and GuardError when a size
// exceeds the suite's enumeration limit.
SuiteReport RunSuite(std::string_view suite, const VerifyOptions& options);

// Exhaustive oracles.
Matching BruteForceMatchingK(const WeightedBipartiteGraph& g, int k);
std::optional<int> BruteForceMinCircuit(const Matroid& m);

}  // namespace msls

#endif  // MSLS_VERIFY_H_
