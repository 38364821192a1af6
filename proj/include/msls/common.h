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

#ifndef MSLS_COMMON_H_
#define MSLS_COMMON_H_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace msls {

// Error taxonomy. The CLI maps these onto its exit codes.

// Input data violates a documented invariant (bad matrix, bad table length).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An element or mask lies outside the ground set.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Operation-specific precondition failed (dependent set passed as a base,
// k out of range, x = 0 in a smoothness check, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive enumeration refused because the instance is too large, or an
// iteration cap was hit.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant violated; indicates a bug or a broken oracle.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kMaxGroundSet = 62;
inline constexpr int kDefaultExhaustiveLimit = 14;

// Relative/absolute comparison used throughout: a <= b holds when
// a - b <= max(abs, rel * max(|a|, |b|)).
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  double Slack(double a, double b) const {
    return std::max(abs, rel * std::max(std::fabs(a), std::fabs(b)));
  }
  bool Leq(double a, double b) const { return a - b <= Slack(a, b); }
  bool Near(double a, double b) const {
    return std::fabs(a - b) <= Slack(a, b);
  }
};

// Subset of the ground set {0, ..., n-1} stored as a bitmask.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(uint64_t bits) : bits_(bits) {}

  static constexpr SubsetMask Full(int n) {
    return SubsetMask(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static constexpr SubsetMask Singleton(int i) {
    return SubsetMask(uint64_t{1} << i);
  }
  static SubsetMask Of(const std::vector<int>& elements) {
    uint64_t bits = 0;
    for (int e : elements) bits |= uint64_t{1} << e;
    return SubsetMask(bits);
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr SubsetMask with(int i) const {
    return SubsetMask(bits_ | (uint64_t{1} << i));
  }
  constexpr SubsetMask without(int i) const {
    return SubsetMask(bits_ & ~(uint64_t{1} << i));
  }
  constexpr bool IsSubsetOf(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool FitsIn(int n) const {
    return n >= 64 || (bits_ >> n) == 0;
  }

  std::vector<int> Elements() const {
    std::vector<int> out;
    for (uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(SubsetMask a, SubsetMask b) = default;
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) = default;

 private:
  uint64_t bits_ = 0;
};

// Element count of the ground set; elements are 0..n-1.
struct GroundSet {
  int n = 0;

  static GroundSet Of(int n) {
    if (n < 1 || n > kMaxGroundSet) {
      throw ValidationError("ground set size must be in [1, " +
                            std::to_string(kMaxGroundSet) + "], got " +
                            std::to_string(n));
    }
    return GroundSet{n};
  }
  SubsetMask full() const { return SubsetMask::Full(n); }
};

// Uniform double in [0, 1) from the top 53 bits of one draw. Unlike
// std::uniform_real_distribution this is identical across standard
// libraries, which keeps seeded outputs portable.
inline double UnitDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace msls

#endif  // MSLS_COMMON_H_
