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

#include "msls/verify.h"

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "msls/diag.h"
#include "msls/gen.h"
#include "msls/search.h"

namespace msls {

bool SuiteReport::passed() const {
  for (const auto& p : properties) {
    if (!p.passed()) return false;
  }
  return true;
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {"lemmas", "smoothness",
                                                 "matching", "matroid",
                                                 "ratios"};
  return names;
}

Matching BruteForceMatchingK(const WeightedBipartiteGraph& g, int k) {
  if (k < 0 || k > std::min(g.left_size, g.right_size)) {
    throw PreconditionError("matching cardinality out of range");
  }
  Matching best;
  best.total_weight = -std::numeric_limits<double>::infinity();
  std::vector<std::pair<int, int>> current;
  std::vector<char> used(g.right_size, 0);
  std::function<void(int, double)> rec = [&](int left, double weight) {
    const int have = static_cast<int>(current.size());
    if (have == k) {
      if (weight > best.total_weight) {
        best.total_weight = weight;
        best.pairs = current;
      }
      return;
    }
    if (g.left_size - left < k - have) return;
    for (int r = 0; r < g.right_size; ++r) {
      if (used[r]) continue;
      used[r] = 1;
      current.emplace_back(left, r);
      rec(left + 1, weight + g.weight(left, r));
      current.pop_back();
      used[r] = 0;
    }
    rec(left + 1, weight);
  };
  rec(0, 0.0);
  if (k == 0) best.total_weight = 0.0;
  return best;
}

std::optional<int> BruteForceMinCircuit(const Matroid& m) {
  const int n = m.n();
  if (n > 20) throw GuardError("circuit enumeration needs n <= 20");
  std::optional<int> best;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    const SubsetMask s(mask);
    if (m.IsIndependent(s)) continue;
    if (!best || s.size() < *best) best = s.size();
  }
  return best;
}

namespace {

constexpr int kMatroidEnumerationLimit = 12;
constexpr int kExchangeEnumerationLimit = 10;

// Ordered collection of named outcomes.
class Outcomes {
 public:
  PropertyOutcome& Get(const std::string& name) {
    for (auto& p : list_) {
      if (p.name == name) return p;
    }
    PropertyOutcome p;
    p.name = name;
    p.worst_slack = std::numeric_limits<double>::infinity();
    list_.push_back(p);
    return list_.back();
  }

  // Records observed <= bound up to the tolerance.
  void Check(const std::string& name, double observed, double bound,
             const Tolerance& tol, const std::function<std::string()>& witness) {
    PropertyOutcome& p = Get(name);
    ++p.checked;
    const double scale = std::max({std::fabs(observed), std::fabs(bound),
                                   tol.abs});
    const double slack = std::isinf(bound) ? 1.0 : (bound - observed) / scale;
    if (!tol.Leq(observed, bound)) {
      if (p.failed == 0) p.witness = witness();
      ++p.failed;
    }
    if (slack < p.worst_slack) {
      p.worst_slack = slack;
      if (p.failed == 0) p.witness = witness();
    }
  }

  // Records a == b up to the tolerance.
  void Near(const std::string& name, double a, double b, const Tolerance& tol,
            const std::function<std::string()>& witness) {
    PropertyOutcome& p = Get(name);
    ++p.checked;
    const double slack =
        -std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1.0});
    if (!tol.Near(a, b)) {
      if (p.failed == 0) p.witness = witness();
      ++p.failed;
    }
    if (slack < p.worst_slack) {
      p.worst_slack = slack;
      if (p.failed == 0) p.witness = witness();
    }
  }

  void Boolean(const std::string& name, bool ok,
               const std::function<std::string()>& witness) {
    PropertyOutcome& p = Get(name);
    ++p.checked;
    if (p.worst_slack > 0.0) p.worst_slack = 0.0;
    if (!ok) {
      if (p.failed == 0) p.witness = witness();
      ++p.failed;
      p.worst_slack = -1.0;
    }
  }

  void Skip(const std::string& name) { ++Get(name).skipped; }

  std::vector<PropertyOutcome> Finish() {
    for (auto& p : list_) {
      if (std::isinf(p.worst_slack)) p.worst_slack = 0.0;
    }
    return list_;
  }

 private:
  std::vector<PropertyOutcome> list_;
};

std::string Label(const std::string& family, int n, int t) {
  return family + " n=" + std::to_string(n) + " #" + std::to_string(t);
}

std::vector<int> SizesOr(const VerifyOptions& o, std::vector<int> fallback) {
  return o.sizes.empty() ? fallback : o.sizes;
}

void Guard(const std::vector<int>& sizes, int limit, const char* suite) {
  for (int n : sizes) {
    if (n < 2 || n > limit) {
      throw GuardError(std::string(suite) + " suite needs sizes in [2, " +
                       std::to_string(limit) + "], got " + std::to_string(n));
    }
  }
}

uint64_t InstanceSeed(uint64_t seed, int n, int t) {
  // splitmix64 of the triple, so instances do not share streams.
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (1 + static_cast<uint64_t>(n) * 1000003ULL +
                                               static_cast<uint64_t>(t));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct FamilyInstance {
  std::string family;
  SetFunctionPtr fn;
  Matroid matroid = Matroid::MakeUniform(1, 1);
};

// Diversity, coverage and summed families used by the lemma and ratio
// suites.
FamilyInstance MakeFamily(int index, int n, uint64_t seed,
                          const std::string& matroid) {
  GenParams p;
  p.n = n;
  p.seed = seed;
  p.matroid = matroid;
  p.rank = std::max(2, n / 3);
  FamilyInstance out;
  switch (index % 5) {
    case 0:
      p.kind = "metric-random";
      out.family = "metric-diversity";
      break;
    case 1:
      p.kind = "semimetric-power";
      p.power = 1.5;
      out.family = "power-1.5-diversity";
      break;
    case 2:
      p.kind = "js-random";
      out.family = "js-diversity";
      break;
    case 3:
      p.kind = "coverage-random";
      out.family = "coverage";
      break;
    default: {
      p.kind = "coverage-random";
      const Instance cov = Generate(p);
      p.kind = "metric-random";
      const Instance div = Generate(p);
      out.family = "coverage+metric-diversity";
      out.fn = BuildWeightedSum({{cov.function, 1.0}, {div.function, 1.0}});
      out.matroid = cov.matroid;
      return out;
    }
  }
  const Instance inst = Generate(p);
  out.fn = inst.function;
  out.matroid = inst.matroid;
  return out;
}

SuiteReport LemmaSuite(const VerifyOptions& o) {
  const std::vector<int> sizes = SizesOr(o, {6, 8});
  Guard(sizes, kDefaultExhaustiveLimit, "lemmas");
  Outcomes out;
  for (int n : sizes) {
    for (int t = 0; t < o.count; ++t) {
      const FamilyInstance inst =
          MakeFamily(t, n, InstanceSeed(o.seed, n, t), "uniform");
      LemmaOptions lo;
      lo.seed = InstanceSeed(o.seed ^ 0x5bd1e995ULL, n, t);
      lo.samples = o.samples;
      lo.tolerance = o.tolerance;
      const LemmaReport rep = VerifyLemmas(*inst.fn, lo);
      for (const LemmaCheck& c : rep.checks) {
        if (c.status == LemmaStatus::kSkipped) {
          out.Skip(c.name);
          continue;
        }
        PropertyOutcome& p = out.Get(c.name);
        p.checked += c.checks;
        if (c.status == LemmaStatus::kFail) {
          if (p.failed == 0) {
            p.witness = Label(inst.family, n, t) + ": " + c.witness;
          }
          ++p.failed;
        }
        if (c.worst_slack < p.worst_slack) p.worst_slack = c.worst_slack;
      }
    }
  }
  return {"lemmas", out.Finish()};
}

SuiteReport SmoothnessSuite(const VerifyOptions& o) {
  const std::vector<int> sizes = SizesOr(o, {6, 8});
  Guard(sizes, 12, "smoothness");
  Outcomes out;
  for (int n : sizes) {
    for (int t = 0; t < o.count; ++t) {
      GenParams p;
      p.n = n;
      p.seed = InstanceSeed(o.seed, n, t);
      static const char* kKinds[] = {"metric-random", "semimetric-power",
                                     "negtype-sqeuclid"};
      p.kind = kKinds[t % 3];
      p.power = 1.5;
      p.modular = t % 2 == 1;
      const Instance inst = Generate(p);
      SmoothnessOptions so;
      so.seed = InstanceSeed(o.seed ^ 0x27d4eb2dULL, n, t);
      so.samples = o.samples;
      so.tolerance = o.tolerance;
      for (const LemmaCheck& c : VerifySmoothness(*inst.function, so)) {
        if (c.status == LemmaStatus::kSkipped) {
          out.Skip(c.name);
          continue;
        }
        PropertyOutcome& q = out.Get(c.name);
        q.checked += c.checks;
        if (c.status == LemmaStatus::kFail) {
          if (q.failed == 0) q.witness = Label(p.kind, n, t) + ": " + c.witness;
          ++q.failed;
        }
        if (c.worst_slack < q.worst_slack) q.worst_slack = c.worst_slack;
      }
    }
  }
  return {"smoothness", out.Finish()};
}

SuiteReport MatchingSuite(const VerifyOptions& o) {
  const std::vector<int> sizes = SizesOr(o, {7});
  Guard(sizes, 8, "matching");
  Outcomes out;
  for (int n : sizes) {
    for (int t = 0; t < o.count; ++t) {
      std::mt19937_64 rng(InstanceSeed(o.seed, n, t));
      WeightedBipartiteGraph g;
      g.left_size = 1 + static_cast<int>(rng() % n);
      g.right_size = 1 + static_cast<int>(rng() % n);
      const bool integral = t % 3 == 0;  // integer weights force ties
      for (int e = 0; e < g.left_size * g.right_size; ++e) {
        const double u = UnitDouble(rng);
        g.weights.push_back(integral ? std::floor(u * 7.0) - 3.0
                                     : 10.0 * u - 5.0);
      }
      const int k = static_cast<int>(
          rng() % (std::min(g.left_size, g.right_size) + 1));
      const Matching fast = MaxWeightMatchingK(g, k);
      const Matching slow = BruteForceMatchingK(g, k);
      const auto label = [&] {
        std::ostringstream os;
        os << g.left_size << "x" << g.right_size << " k=" << k << " #" << t
           << " hungarian=" << fast.total_weight
           << " exhaustive=" << slow.total_weight;
        return os.str();
      };
      out.Near("equals_exhaustive", fast.total_weight, slow.total_weight,
               o.tolerance, label);
      std::vector<char> lused(g.left_size, 0);
      std::vector<char> rused(g.right_size, 0);
      bool disjoint = static_cast<int>(fast.pairs.size()) == k;
      double sum = 0.0;
      for (const auto& [a, b] : fast.pairs) {
        disjoint = disjoint && !lused[a] && !rused[b];
        lused[a] = rused[b] = 1;
        sum += g.weight(a, b);
      }
      out.Boolean("feasible_exactly_k", disjoint, label);
      if (integral) {
        // Exact ties: enumeration meets matchings in lexicographic order.
        out.Boolean("lexicographic_tie_break", fast.pairs == slow.pairs,
                    label);
      }
      out.Near("weight_consistent", sum, fast.total_weight, o.tolerance,
               label);
      WeightedBipartiteGraph shifted = g;
      for (double& w : shifted.weights) w += 2.5;
      const Matching moved = MaxWeightMatchingK(shifted, k);
      out.Near("affine_shift", moved.total_weight,
               fast.total_weight + 2.5 * k, o.tolerance, label);
    }
  }
  return {"matching", out.Finish()};
}

Matroid RandomMatroid(int kind, int n, std::mt19937_64& rng) {
  if (kind == 0) {
    return Matroid::MakeUniform(n, static_cast<int>(rng() % (n + 1)));
  }
  if (kind == 1) {
    const int blocks = 1 + static_cast<int>(rng() % std::min(n, 4));
    std::vector<std::vector<int>> b(blocks);
    for (int e = 0; e < n; ++e) b[rng() % blocks].push_back(e);
    std::vector<int> caps(blocks);
    for (int q = 0; q < blocks; ++q) {
      caps[q] = static_cast<int>(rng() % (b[q].size() + 1));
    }
    return Matroid::MakePartition(std::move(b), std::move(caps));
  }
  const int vertices = 2 + static_cast<int>(rng() % n);
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < n; ++e) {
    // Self-loops and parallel edges are allowed on purpose.
    edges.emplace_back(static_cast<int>(rng() % vertices),
                       static_cast<int>(rng() % vertices));
  }
  return Matroid::MakeGraphic(vertices, std::move(edges));
}

SuiteReport MatroidSuite(const VerifyOptions& o) {
  const std::vector<int> sizes = SizesOr(o, {6, 9});
  Guard(sizes, kMatroidEnumerationLimit, "matroid");
  Outcomes out;
  static const char* kNames[] = {"uniform", "partition", "graphic"};
  for (int n : sizes) {
    for (int t = 0; t < o.count; ++t) {
      std::mt19937_64 rng(InstanceSeed(o.seed, n, t));
      const Matroid m = RandomMatroid(t % 3, n, rng);
      const auto label = [&] { return Label(kNames[t % 3], n, t); };
      const uint64_t count = uint64_t{1} << n;
      std::vector<char> indep(count);
      int max_size = 0;
      for (uint64_t s = 0; s < count; ++s) {
        indep[s] = m.IsIndependent(SubsetMask(s));
        if (indep[s]) max_size = std::max(max_size, std::popcount(s));
      }
      bool hereditary = indep[0];
      for (uint64_t s = 0; s < count && hereditary; ++s) {
        if (!indep[s]) continue;
        for (uint64_t b = s; b != 0; b &= b - 1) {
          if (!indep[s & ~(b & -b)]) hereditary = false;
        }
      }
      out.Boolean("hereditary", hereditary, label);
      if (n <= kExchangeEnumerationLimit) {
        bool exchange = true;
        for (uint64_t s = 0; s < count && exchange; ++s) {
          if (!indep[s]) continue;
          for (uint64_t u = 0; u < count && exchange; ++u) {
            if (!indep[u] || std::popcount(u) != std::popcount(s) + 1) continue;
            bool found = false;
            for (uint64_t b = u & ~s; b != 0 && !found; b &= b - 1) {
              found = indep[s | (b & -b)];
            }
            exchange = found;
          }
        }
        out.Boolean("exchange", exchange, label);
      } else {
        out.Skip("exchange");
      }
      out.Boolean("rank_is_max_independent", m.rank() == max_size, label);
      bool rank_of_ok = true;
      bool bases_ok = true;
      for (uint64_t s = 0; s < count; ++s) {
        int best = 0;
        // Largest independent subset of s, by enumerating submasks.
        for (uint64_t sub = s;; sub = (sub - 1) & s) {
          if (indep[sub]) best = std::max(best, std::popcount(sub));
          if (sub == 0) break;
        }
        if (m.RankOf(SubsetMask(s)) != best) rank_of_ok = false;
        if (indep[s] && m.IsBase(SubsetMask(s)) !=
                            (std::popcount(s) == max_size)) {
          bases_ok = false;
        }
      }
      out.Boolean("rank_of_matches_enumeration", rank_of_ok, label);
      if (n <= kExchangeEnumerationLimit) {
        bool monotone = true;
        bool submodular = true;
        for (uint64_t s = 0; s < count; ++s) {
          const int rs = m.RankOf(SubsetMask(s));
          for (int i = 0; i < n; ++i) {
            const uint64_t bi = uint64_t{1} << i;
            if (s & bi) continue;
            const int rsi = m.RankOf(SubsetMask(s | bi));
            monotone = monotone && rsi >= rs;
            for (int j = i + 1; j < n; ++j) {
              const uint64_t bj = uint64_t{1} << j;
              if (s & bj) continue;
              submodular = submodular &&
                           m.RankOf(SubsetMask(s | bi | bj)) -
                                   m.RankOf(SubsetMask(s | bj)) <=
                               rsi - rs;
            }
          }
        }
        out.Boolean("rank_monotone", monotone, label);
        out.Boolean("rank_submodular", submodular, label);
      } else {
        out.Skip("rank_monotone");
        out.Skip("rank_submodular");
      }
      const std::optional<int> c = m.min_circuit_size();
      bool small_independent = true;
      for (uint64_t s = 0; s < count; ++s) {
        if (c && std::popcount(s) < *c && !indep[s]) small_independent = false;
      }
      out.Boolean("sets_below_circuit_independent", small_independent, label);
      out.Boolean("bases_have_rank_size", bases_ok, label);
      out.Boolean("min_circuit_matches_enumeration",
                  m.min_circuit_size() == BruteForceMinCircuit(m), label);
      std::vector<uint64_t> bases;
      for (uint64_t s = 0; s < count; ++s) {
        if (indep[s] && std::popcount(s) == max_size) bases.push_back(s);
      }
      for (int q = 0; q < 5; ++q) {
        const SubsetMask s(bases[rng() % bases.size()]);
        const SubsetMask u(bases[rng() % bases.size()]);
        const ExchangeBijection g = m.ExchangeBijectionBetween(s, u);
        out.Boolean("exchange_bijection_valid", IsValidExchange(m, s, u, g),
                    label);
      }
    }
  }
  return {"matroid", out.Finish()};
}

SuiteReport RatioSuite(const VerifyOptions& o) {
  const std::vector<int> sizes = SizesOr(o, {8, 10});
  Guard(sizes, 12, "ratios");
  Outcomes out;
  SolveConfig cfg;
  cfg.epsilon = o.epsilon;
  for (int n : sizes) {
    for (int t = 0; t < o.count; ++t) {
      const std::string matroid = t % 2 == 0 ? "uniform" : "graphic";
      const FamilyInstance inst =
          MakeFamily(t / 2, n, InstanceSeed(o.seed, n, t), matroid);
      const auto label = [&] { return Label(inst.family + "/" + matroid, n, t); };
      const ValueTable table = ValueTable::Materialize(*inst.fn, 12);
      const GammaReport gamma = GammaParameter(table);
      const ClassificationReport cls = Classify(table);
      const SolveResult res = Solve(*inst.fn, inst.matroid, cfg);
      const OptResult opt = BruteForceOpt(*inst.fn, inst.matroid);
      const int r = inst.matroid.rank();

      out.Boolean("local_optimum_certificate",
                  IsApproximateLocalOptimum(*inst.fn, inst.matroid,
                                            res.search.s, cfg.epsilon) &&
                      inst.matroid.IsBase(res.search.s),
                  label);
      SubsetMask replay = res.search.initial;
      bool replay_ok = true;
      for (const SwapStep& step : res.search.trace) {
        replay = replay.without(step.removed).with(step.inserted);
        replay_ok = replay_ok && inst.matroid.IsIndependent(replay);
      }
      out.Boolean("trace_replay_independent",
                  replay_ok && replay == res.search.s, label);
      out.Check("chosen_not_above_opt", res.chosen_value, opt.value,
                o.tolerance, label);

      const bool gamma_ms = cls.monotone.holds && !gamma.infinite;
      if (!gamma_ms || r < 2) {
        out.Skip("general_ratio");
        out.Skip("iteration_bound");
      } else {
        const double ratio_bound =
            GeneralRatioBound(gamma.gamma, r, n, cfg.epsilon);
        out.Check("general_ratio", opt.value, ratio_bound * res.chosen_value,
                  o.tolerance, label);
        out.Check("iteration_bound",
                  static_cast<double>(res.search.trace.size()),
                  IterationBound(gamma.gamma, r, n, cfg.epsilon), o.tolerance,
                  label);
      }
      if (gamma_ms && r >= 2 && cls.supermodular.holds &&
          cls.second_order_submodular.holds) {
        const double bound =
            SupermodularRatioBound(gamma.gamma, r,
                                   inst.matroid.min_circuit_size(), n,
                                   cfg.epsilon);
        out.Check("supermodular_ratio", opt.value,
                  bound * std::max(res.search.value, res.matching.value),
                  o.tolerance, label);
        out.Check("matching_lower_bound", res.matching.weight,
                  res.matching.value, o.tolerance, label);
      } else {
        out.Skip("supermodular_ratio");
        out.Skip("matching_lower_bound");
      }
    }
  }
  return {"ratios", out.Finish()};
}

}  // namespace

SuiteReport RunSuite(std::string_view suite, const VerifyOptions& options) {
  if (options.count < 1) throw ValidationError("count must be >= 1");
  if (suite == "lemmas") return LemmaSuite(options);
  if (suite == "smoothness") return SmoothnessSuite(options);
  if (suite == "matching") return MatchingSuite(options);
  if (suite == "matroid") return MatroidSuite(options);
  if (suite == "ratios") return RatioSuite(options);
  throw ValidationError("unknown verify suite '" + std::string(suite) + "'");
}

}  // namespace msls
