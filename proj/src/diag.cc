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

#include "msls/diag.h"

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "msls/simd.h"

namespace msls {

ValueTable ValueTable::Materialize(const SetFunction& fn, int n_max) {
  const int n = fn.n();
  if (n > n_max) {
    throw GuardError("exhaustive enumeration needs n <= " +
                     std::to_string(n_max) + ", got n = " + std::to_string(n));
  }
  ValueTable table;
  table.n_ = n;
  const uint64_t count = uint64_t{1} << n;
  table.values_.resize(count);
  for (uint64_t m = 0; m < count; ++m) {
    table.values_[m] = fn.Eval(SubsetMask(m));
    table.max_abs_ = std::max(table.max_abs_, std::fabs(table.values_[m]));
  }
  return table;
}

namespace {

uint64_t MaskCount(int n) { return uint64_t{1} << n; }

std::string MaskString(uint64_t mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : SubsetMask(mask).Elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

GammaReport GammaParameter(const ValueTable& table) {
  GammaReport report;
  const int n = table.n();
  bool have_infinite_witness = false;
  for (uint64_t s = 1; s < MaskCount(n); ++s) {
    const double size = std::popcount(s);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double a = table.A(i, j, s);
        const uint64_t base = s & ~((uint64_t{1} << i) | (uint64_t{1} << j));
        const double scale =
            std::max({std::fabs(table[base]),
                      std::fabs(table[base | (uint64_t{1} << i)]),
                      std::fabs(table[base | (uint64_t{1} << j)]),
                      std::fabs(table[base | (uint64_t{1} << i) |
                                      (uint64_t{1} << j)])});
        const double threshold = 1e-12 + 1e-9 * scale;
        if (a <= threshold) continue;
        report.vacuous = false;
        const double lhs = size * a;
        const double rhs = table.B(i, s) + table.B(j, s);
        if (rhs <= threshold) {
          ++report.zero_denominator_count;
          report.infinite = true;
          if (!have_infinite_witness) {
            have_infinite_witness = true;
            report.witness_set = SubsetMask(s);
            report.witness_i = i;
            report.witness_j = j;
            report.witness_lhs = lhs;
            report.witness_rhs = rhs;
          }
          continue;
        }
        const double ratio = lhs / rhs;
        if (ratio > report.gamma) {
          report.gamma = ratio;
          if (!have_infinite_witness) {
            report.witness_set = SubsetMask(s);
            report.witness_i = i;
            report.witness_j = j;
            report.witness_lhs = lhs;
            report.witness_rhs = rhs;
          }
        }
      }
    }
  }
  return report;
}

GammaReport GammaParameter(const SetFunction& fn, int n_max) {
  return GammaParameter(ValueTable::Materialize(fn, n_max));
}

ClassificationReport Classify(const ValueTable& table) {
  ClassificationReport report;
  const int n = table.n();
  const double tol = 1e-12 + 1e-9 * table.MaxAbs();
  report.tolerance = tol;
  const uint64_t count = MaskCount(n);

  for (int i = 0; i < n && report.monotone.holds; ++i) {
    const uint64_t bi = uint64_t{1} << i;
    for (uint64_t s = 0; s < count; ++s) {
      if (s & bi) continue;
      const double b = table.B(i, s);
      if (b < -tol) {
        report.monotone = {false, SubsetMask(s), i, -1, -1, b};
        break;
      }
    }
  }

  auto& sub = report.submodular;
  auto& super = report.supermodular;
  auto& second = report.second_order_submodular;
  for (uint64_t s = 0; s < count; ++s) {
    for (int i = 0; i < n; ++i) {
      if (s & (uint64_t{1} << i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (s & (uint64_t{1} << j)) continue;
        const double a = table.A(i, j, s);
        if (sub.holds && a > tol) sub = {false, SubsetMask(s), i, j, -1, a};
        if (super.holds && a < -tol) super = {false, SubsetMask(s), i, j, -1, a};
        if (!second.holds) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j || (s & (uint64_t{1} << k))) continue;
          const double d = table.A(i, j, s | (uint64_t{1} << k)) - a;
          if (d > tol) {
            second = {false, SubsetMask(s), i, j, k, d};
            break;
          }
        }
      }
    }
  }
  return report;
}

ClassificationReport Classify(const SetFunction& fn, int n_max) {
  return Classify(ValueTable::Materialize(fn, n_max));
}

namespace {

void CheckPoint(std::span<const double> x, int n, const char* what) {
  if (static_cast<int>(x.size()) != n) {
    throw PreconditionError(std::string(what) + " has " +
                            std::to_string(x.size()) + " coordinates, expected " +
                            std::to_string(n));
  }
  for (double v : x) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw PreconditionError(std::string(what) + " leaves the unit box");
    }
  }
}

double GradientFromWeights(const ValueTable& table,
                           const std::vector<double>& p, int i) {
  const std::size_t half = std::size_t{1} << i;
  const std::size_t count = table.values().size();
  const auto values = table.values();
  double total = 0.0;
  for (std::size_t base = 0; base < count; base += 2 * half) {
    total += simd::PairedDifferenceDot(
        values.subspan(base, half), values.subspan(base + half, half),
        std::span<const double>(p).subspan(base, half),
        std::span<const double>(p).subspan(base + half, half));
  }
  return total;
}

double HessianFromWeights(const ValueTable& table, const std::vector<double>& p,
                          int i, int j) {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  const uint64_t bi = uint64_t{1} << i;
  const uint64_t bj = uint64_t{1} << j;
  double total = 0.0;
  for (uint64_t s = 0; s < MaskCount(table.n()); ++s) {
    if (s & (bi | bj)) continue;
    const double weight = p[s] + p[s | bi] + p[s | bj] + p[s | bi | bj];
    if (weight == 0.0) continue;
    total += weight * table.A(i, j, s);
  }
  return total;
}

}  // namespace

std::vector<double> ProductWeights(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> p(MaskCount(n), 0.0);
  p[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    simd::ExpandProduct(std::span<double>(p).first(2 * half), half, x[i]);
  }
  return p;
}

double MultilinearExact(const ValueTable& table, std::span<const double> x) {
  CheckPoint(x, table.n(), "x");
  return simd::Dot(table.values(), ProductWeights(x));
}

double MultilinearGradientExact(const ValueTable& table,
                                std::span<const double> x, int i) {
  CheckPoint(x, table.n(), "x");
  if (i < 0 || i >= table.n()) throw DomainError("coordinate out of range");
  return GradientFromWeights(table, ProductWeights(x), i);
}

double MultilinearHessianExact(const ValueTable& table,
                               std::span<const double> x, int i, int j) {
  CheckPoint(x, table.n(), "x");
  if (i < 0 || j < 0 || i >= table.n() || j >= table.n()) {
    throw DomainError("coordinate out of range");
  }
  return HessianFromWeights(table, ProductWeights(x), i, j);
}

MultilinearDerivatives MultilinearAll(const ValueTable& table,
                                      std::span<const double> x) {
  CheckPoint(x, table.n(), "x");
  const int n = table.n();
  const std::vector<double> p = ProductWeights(x);
  MultilinearDerivatives d;
  d.value = simd::Dot(table.values(), p);
  d.gradient.resize(n);
  d.hessian.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) d.gradient[i] = GradientFromWeights(table, p, i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double h = HessianFromWeights(table, p, i, j);
      d.hessian[static_cast<std::size_t>(i) * n + j] = h;
      d.hessian[static_cast<std::size_t>(j) * n + i] = h;
    }
  }
  return d;
}

double MultilinearExact(const SetFunction& fn, std::span<const double> x) {
  return MultilinearExact(ValueTable::Materialize(fn, kMultilinearLimit), x);
}

double MultilinearGradientExact(const SetFunction& fn,
                                std::span<const double> x, int i) {
  return MultilinearGradientExact(
      ValueTable::Materialize(fn, kMultilinearLimit), x, i);
}

double MultilinearHessianExact(const SetFunction& fn,
                               std::span<const double> x, int i, int j) {
  return MultilinearHessianExact(
      ValueTable::Materialize(fn, kMultilinearLimit), x, i, j);
}

MonteCarloEstimate MultilinearMonteCarlo(const SetFunction& fn,
                                         std::span<const double> x,
                                         int64_t samples, uint64_t seed) {
  CheckPoint(x, fn.n(), "x");
  if (samples < 1) throw PreconditionError("need at least one sample");
  std::mt19937_64 rng(seed);
  // Welford running mean and sum of squared deviations.
  double mean = 0.0;
  double m2 = 0.0;
  for (int64_t t = 1; t <= samples; ++t) {
    uint64_t mask = 0;
    for (int i = 0; i < fn.n(); ++i) {
      if (UnitDouble(rng) < x[i]) mask |= uint64_t{1} << i;
    }
    const double v = fn.Eval(SubsetMask(mask));
    const double delta = v - mean;
    mean += delta / static_cast<double>(t);
    m2 += delta * (v - mean);
  }
  MonteCarloEstimate est;
  est.mean = mean;
  est.samples = samples;
  if (samples > 1) {
    const double variance = m2 / static_cast<double>(samples - 1);
    est.standard_error = std::sqrt(std::max(0.0, variance) /
                                   static_cast<double>(samples));
  }
  return est;
}

SmoothnessCheck CheckOneSidedSmooth(const MultilinearDerivatives& d,
                                    std::span<const double> x,
                                    std::span<const double> u, double sigma) {
  const int n = static_cast<int>(d.gradient.size());
  CheckPoint(x, n, "x");
  CheckPoint(u, n, "u");
  const double x_norm = std::accumulate(x.begin(), x.end(), 0.0);
  if (x_norm == 0.0) {
    throw PreconditionError("one-sided smoothness is defined only at x != 0");
  }
  const double u_norm = std::accumulate(u.begin(), u.end(), 0.0);
  double quad = 0.0;
  double directional = 0.0;
  for (int i = 0; i < n; ++i) {
    directional += u[i] * d.gradient[i];
    for (int j = 0; j < n; ++j) quad += u[i] * u[j] * d.H(i, j);
  }
  SmoothnessCheck check;
  check.x.assign(x.begin(), x.end());
  check.u.assign(u.begin(), u.end());
  check.sigma = sigma;
  check.lhs = 0.5 * quad;
  check.rhs = sigma * (u_norm / x_norm) * directional;
  check.residual = check.lhs - check.rhs;
  return check;
}

SmoothnessCheck CheckOneSidedSmooth(const ValueTable& table,
                                    std::span<const double> x,
                                    std::span<const double> u, double sigma) {
  CheckPoint(x, table.n(), "x");
  return CheckOneSidedSmooth(MultilinearAll(table, x), x, u, sigma);
}

double ExpectationInequalityResidual(const MultilinearDerivatives& d,
                                     std::span<const double> x, int i, int j,
                                     double sigma) {
  const double x_norm = std::accumulate(x.begin(), x.end(), 0.0);
  return x_norm * d.H(i, j) - sigma * (d.gradient[i] + d.gradient[j]);
}

double ExpectationInequalityResidual(const ValueTable& table,
                                     std::span<const double> x, int i, int j,
                                     double sigma) {
  CheckPoint(x, table.n(), "x");
  const std::vector<double> p = ProductWeights(x);
  const double x_norm = std::accumulate(x.begin(), x.end(), 0.0);
  return x_norm * HessianFromWeights(table, p, i, j) -
         sigma * (GradientFromWeights(table, p, i) +
                  GradientFromWeights(table, p, j));
}

double InductionConstant(int r, double gamma) {
  double k = 1.0;
  double beta = 2.0 * gamma + 1.0;
  for (int m = 2; m <= r - 1; ++m) {
    k += beta;
    beta *= 1.0 + 2.0 * gamma / m;
  }
  return k;
}

std::string_view LemmaStatusName(LemmaStatus status) {
  switch (status) {
    case LemmaStatus::kPass:
      return "pass";
    case LemmaStatus::kFail:
      return "fail";
    case LemmaStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

bool LemmaReport::AllPassed() const {
  for (const auto& c : checks) {
    if (c.status == LemmaStatus::kFail) return false;
  }
  return true;
}

namespace {

// Collects observed <= bound comparisons for one named check.
class CheckAccumulator {
 public:
  CheckAccumulator(std::string name, Tolerance tol) : tol_(tol) {
    check_.name = std::move(name);
    check_.worst_slack = std::numeric_limits<double>::infinity();
  }

  // Passes when observed - bound <= tol.abs + tol.rel * scale. The slack is
  // normalized by scale, which defaults to max(|observed|, |bound|).
  void Observe(double observed, double bound,
               const std::function<std::string()>& witness,
               double scale = -1.0) {
    if (scale < 0.0) scale = std::max(std::fabs(observed), std::fabs(bound));
    ++check_.checks;
    const double slack = (bound - observed) / std::max(scale, tol_.abs);
    if (observed - bound > tol_.abs + tol_.rel * scale) {
      if (check_.status != LemmaStatus::kFail) check_.witness = witness();
      check_.status = LemmaStatus::kFail;
    }
    if (slack < check_.worst_slack) {
      check_.worst_slack = slack;
      if (check_.status != LemmaStatus::kFail) check_.witness = witness();
    }
  }

  LemmaCheck Finish(std::string note = {}) {
    if (check_.checks == 0) check_.worst_slack = 0.0;
    check_.note = std::move(note);
    return check_;
  }

  static LemmaCheck Skipped(std::string name, std::string note) {
    LemmaCheck c;
    c.name = std::move(name);
    c.status = LemmaStatus::kSkipped;
    c.note = std::move(note);
    return c;
  }

 private:
  Tolerance tol_;
  LemmaCheck check_;
};

// Portable Fisher-Yates (std::shuffle is implementation-defined).
void Shuffle(std::vector<int>& v, std::mt19937_64& rng) {
  for (std::size_t k = v.size(); k > 1; --k) {
    std::swap(v[k - 1], v[rng() % k]);
  }
}

std::vector<double> RandomPoint(int n, std::mt19937_64& rng) {
  std::vector<double> x(n);
  for (double& v : x) v = UnitDouble(rng);
  return x;
}

LemmaCheck CheckDiscreteIntegral(const ValueTable& table, const Tolerance& tol,
                                 std::mt19937_64& rng) {
  CheckAccumulator acc("discrete_integral", tol);
  const int n = table.n();
  for (uint64_t r = 0; r < MaskCount(n); ++r) {
    std::vector<int> ascending = SubsetMask(r).Elements();
    std::vector<int> descending(ascending.rbegin(), ascending.rend());
    std::vector<int> shuffled = ascending;
    Shuffle(shuffled, rng);
    for (const auto* order : {&ascending, &descending, &shuffled}) {
      for (int i = 0; i < n; ++i) {
        const double lhs = table.B(i, r);
        double rhs = table[uint64_t{1} << i];
        double scale = std::fabs(lhs) + std::fabs(rhs);
        uint64_t prefix = 0;
        for (int v : *order) {
          const double a = table.A(i, v, prefix);
          rhs += a;
          scale += std::fabs(a);
          prefix |= uint64_t{1} << v;
        }
        acc.Observe(std::fabs(lhs - rhs), 0.0, [&] {
          return "i=" + std::to_string(i) + " R=" + MaskString(r);
        }, scale);
      }
    }
  }
  return acc.Finish("ascending, descending and one shuffled order per R");
}

double SumGradEwsFactor(int size, double gamma) {
  const double lo = size / 2;
  const double hi = size - lo;
  return ((lo * lo + hi * hi) / (lo * hi) + 2.0) * gamma + 2.0;
}

}  // namespace

LemmaReport VerifyLemmas(const SetFunction& fn, const LemmaOptions& options) {
  const ValueTable table = ValueTable::Materialize(fn, options.n_max);
  const int n = table.n();
  const Tolerance& tol = options.tolerance;
  std::mt19937_64 rng(options.seed);

  LemmaReport report;
  report.gamma = GammaParameter(table);
  report.classification = Classify(table);
  const auto& cls = report.classification;
  const double gamma = report.gamma.gamma;
  const bool monotone = cls.monotone.holds;
  const bool gamma_ms = monotone && !report.gamma.infinite;
  const std::string not_gamma_ms =
      monotone ? "gamma is unbounded" : "function is not monotone";

  report.checks.push_back(CheckDiscreteIntegral(table, tol, rng));

  // Sum of B_i(R - i) over R, against (5 gamma + 2) f(R) and the sharper
  // split-dependent factor.
  if (gamma_ms) {
    CheckAccumulator loose("sum_grad_ews", tol);
    CheckAccumulator sharp("sum_grad_ews_sharp", tol);
    for (uint64_t r = 0; r < MaskCount(n); ++r) {
      const int size = std::popcount(r);
      if (size < 2) continue;
      double sum = 0.0;
      for (int i : SubsetMask(r).Elements()) sum += table.B(i, r);
      const auto witness = [&] { return "R=" + MaskString(r); };
      loose.Observe(sum, (5.0 * gamma + 2.0) * table[r], witness);
      sharp.Observe(sum, SumGradEwsFactor(size, gamma) * table[r], witness);
    }
    report.checks.push_back(loose.Finish());
    report.checks.push_back(sharp.Finish());
  } else {
    report.checks.push_back(
        CheckAccumulator::Skipped("sum_grad_ews", not_gamma_ms));
    report.checks.push_back(
        CheckAccumulator::Skipped("sum_grad_ews_sharp", not_gamma_ms));
  }

  // Sum of B_i(R) over R against 2 f(R), and x^T H x <= 2 F(x).
  if (monotone && cls.second_order_submodular.holds) {
    CheckAccumulator discrete("second_order_structure", tol);
    for (uint64_t r = 0; r < MaskCount(n); ++r) {
      double sum = 0.0;
      for (int i : SubsetMask(r).Elements()) sum += table.B(i, r);
      discrete.Observe(sum, 2.0 * table[r], [&] { return "R=" + MaskString(r); });
    }
    report.checks.push_back(discrete.Finish());

    CheckAccumulator continuous("second_order_quadratic", tol);
    for (uint64_t r = 0; r < MaskCount(n); ++r) {
      double quad = 0.0;
      for (int i : SubsetMask(r).Elements()) {
        for (int j : SubsetMask(r).Elements()) quad += table.A(i, j, r);
      }
      continuous.Observe(quad, 2.0 * table[r],
                         [&] { return "x=1_" + MaskString(r); });
    }
    for (int t = 0; t < options.samples; ++t) {
      const std::vector<double> x = RandomPoint(n, rng);
      const MultilinearDerivatives d = MultilinearAll(table, x);
      double quad = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) quad += x[i] * x[j] * d.H(i, j);
      }
      continuous.Observe(quad, 2.0 * d.value,
                         [&] { return "interior sample " + std::to_string(t); });
    }
    report.checks.push_back(continuous.Finish());
  } else {
    const std::string note = monotone ? "function is not second-order submodular"
                                      : "function is not monotone";
    report.checks.push_back(
        CheckAccumulator::Skipped("second_order_structure", note));
    report.checks.push_back(
        CheckAccumulator::Skipped("second_order_quadratic", note));
  }

  // u^T grad F(1_R + eps u) <= 2^{4 gamma} u^T grad F(1_R) with
  // u = 1_R v x - 1_R and |x|_1 <= |R|.
  if (gamma_ms && n >= 2) {
    CheckAccumulator acc("grad_ratio_ews", tol);
    const double factor = std::exp2(4.0 * gamma);
    const uint64_t full = MaskCount(n) - 1;
    for (int t = 0; t < options.samples; ++t) {
      uint64_t r = 0;
      while (r == 0 || r == full) r = rng() & full;
      std::vector<double> x = RandomPoint(n, rng);
      const double size = std::popcount(r);
      const double x_norm = std::accumulate(x.begin(), x.end(), 0.0);
      if (x_norm > size) {
        for (double& v : x) v *= size / x_norm;
      }
      const double eps = UnitDouble(rng);
      std::vector<double> base(n, 0.0);
      std::vector<double> u(n, 0.0);
      for (int i = 0; i < n; ++i) {
        base[i] = (r >> i) & 1U ? 1.0 : 0.0;
        u[i] = std::max(base[i], x[i]) - base[i];
      }
      std::vector<double> moved(n);
      for (int i = 0; i < n; ++i) moved[i] = std::min(1.0, base[i] + eps * u[i]);
      const std::vector<double> p_base = ProductWeights(base);
      const std::vector<double> p_moved = ProductWeights(moved);
      double at_base = 0.0;
      double at_moved = 0.0;
      for (int i = 0; i < n; ++i) {
        if (u[i] == 0.0) continue;
        at_base += u[i] * GradientFromWeights(table, p_base, i);
        at_moved += u[i] * GradientFromWeights(table, p_moved, i);
      }
      acc.Observe(at_moved, factor * at_base, [&] {
        return "R=" + MaskString(r) + " sample " + std::to_string(t);
      });
    }
    report.checks.push_back(acc.Finish());
  } else {
    report.checks.push_back(CheckAccumulator::Skipped(
        "grad_ratio_ews", gamma_ms ? "needs n >= 2" : not_gamma_ms));
  }

  // Directional derivative growth along u for an everywhere-smooth F; the
  // smoothness constant is the supermodular one.
  if (gamma_ms && cls.supermodular.holds) {
    CheckAccumulator acc("epsilon_change_gradient", tol);
    const double sigma = std::max(3.0 * gamma, 2.0 * gamma + 1.0);
    for (int t = 0; t < options.samples; ++t) {
      std::vector<double> x = RandomPoint(n, rng);
      std::vector<double> u = RandomPoint(n, rng);
      double eps = UnitDouble(rng);
      for (int i = 0; i < n; ++i) {
        if (u[i] > 0.0) eps = std::min(eps, (1.0 - x[i]) / u[i]);
      }
      std::vector<double> moved(n);
      for (int i = 0; i < n; ++i) moved[i] = std::min(1.0, x[i] + eps * u[i]);
      const double x_norm = std::accumulate(x.begin(), x.end(), 0.0);
      const double moved_norm = std::accumulate(moved.begin(), moved.end(), 0.0);
      if (x_norm == 0.0) continue;
      const std::vector<double> p_x = ProductWeights(x);
      const std::vector<double> p_moved = ProductWeights(moved);
      double at_x = 0.0;
      double at_moved = 0.0;
      for (int i = 0; i < n; ++i) {
        at_x += u[i] * GradientFromWeights(table, p_x, i);
        at_moved += u[i] * GradientFromWeights(table, p_moved, i);
      }
      const double growth = std::pow(moved_norm / x_norm, 2.0 * sigma);
      acc.Observe(at_moved, growth * at_x,
                  [&] { return "sample " + std::to_string(t); });
    }
    report.checks.push_back(acc.Finish());
  } else {
    report.checks.push_back(CheckAccumulator::Skipped(
        "epsilon_change_gradient",
        gamma_ms ? "function is not supermodular" : not_gamma_ms));
  }

  // A_ij(S) <= 0 for nonempty S versus the increment-comparison form over
  // S != empty and distinct i, j outside S.
  {
    CheckAccumulator acc("zero_ms_equivalence", tol);
    const double t = 1e-12 + 1e-9 * table.MaxAbs();
    bool zero_ms = true;
    bool increments = true;
    for (uint64_t s = 1; s < MaskCount(n); ++s) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (table.A(i, j, s) > t) zero_ms = false;
          const uint64_t bi = uint64_t{1} << i;
          const uint64_t bj = uint64_t{1} << j;
          if (i == j || (s & (bi | bj))) continue;
          const double small = table[s | bi] - table[s];
          const double large = table[s | bi | bj] - table[s | bj];
          if (small < large - t) increments = false;
        }
      }
    }
    acc.Observe(zero_ms == increments ? 0.0 : 1.0, 0.0, [&] {
      return std::string("0-MS=") + (zero_ms ? "true" : "false") +
             " increments=" + (increments ? "true" : "false");
    }, 1.0);
    report.checks.push_back(acc.Finish(zero_ms ? "function is 0-MS"
                                               : "function is not 0-MS"));
  }

  // f(A) <= K(|A|, gamma) * max f(pair within A).
  if (gamma_ms) {
    CheckAccumulator acc("induction_constant", tol);
    for (uint64_t a = 0; a < MaskCount(n); ++a) {
      const int size = std::popcount(a);
      if (size < 3) continue;
      const std::vector<int> elems = SubsetMask(a).Elements();
      double best_pair = 0.0;
      for (std::size_t p = 0; p < elems.size(); ++p) {
        for (std::size_t q = p + 1; q < elems.size(); ++q) {
          best_pair = std::max(
              best_pair,
              table[(uint64_t{1} << elems[p]) | (uint64_t{1} << elems[q])]);
        }
      }
      acc.Observe(table[a], InductionConstant(size, gamma) * best_pair,
                  [&] { return "A=" + MaskString(a); });
    }
    report.checks.push_back(acc.Finish());
  } else {
    report.checks.push_back(
        CheckAccumulator::Skipped("induction_constant", not_gamma_ms));
  }
  return report;
}

namespace {

// Expectation inequality and one-sided smoothness at one point, given its
// derivatives.
void ObservePoint(CheckAccumulator& expectation, CheckAccumulator& smooth,
                  const MultilinearDerivatives& d, std::span<const double> x,
                  std::span<const double> u, double sigma,
                  const std::string& label) {
  const int n = static_cast<int>(x.size());
  const double x_norm = std::accumulate(x.begin(), x.end(), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      expectation.Observe(x_norm * d.H(i, j),
                          sigma * (d.gradient[i] + d.gradient[j]), [&] {
                            return label + " i=" + std::to_string(i) +
                                   " j=" + std::to_string(j);
                          });
    }
  }
  const SmoothnessCheck check = CheckOneSidedSmooth(d, x, u, sigma);
  smooth.Observe(check.lhs, check.rhs, [&] { return label; });
}

// Derivatives at an indicator point read straight off the table.
MultilinearDerivatives IndicatorDerivatives(const ValueTable& table,
                                            uint64_t s) {
  const int n = table.n();
  MultilinearDerivatives d;
  d.value = table[s];
  d.gradient.resize(n);
  d.hessian.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    d.gradient[i] = table.B(i, s);
    for (int j = 0; j < n; ++j) {
      d.hessian[static_cast<std::size_t>(i) * n + j] = table.A(i, j, s);
    }
  }
  return d;
}

}  // namespace

std::vector<LemmaCheck> VerifySmoothness(const SetFunction& fn,
                                         const SmoothnessOptions& options) {
  const ValueTable table = ValueTable::Materialize(fn, options.n_max);
  const int n = table.n();
  std::mt19937_64 rng(options.seed);
  const GammaReport gamma_report = GammaParameter(table);
  const ClassificationReport cls = Classify(table);
  const double gamma = gamma_report.gamma;
  const bool gamma_ms = cls.monotone.holds && !gamma_report.infinite;
  std::vector<LemmaCheck> out;

  if (gamma_ms && cls.supermodular.holds) {
    const double sigma = std::max(3.0 * gamma, 2.0 * gamma + 1.0);
    CheckAccumulator expectation("expectation_inequality", options.tolerance);
    CheckAccumulator smooth("one_sided_smooth", options.tolerance);
    for (uint64_t s = 1; s < MaskCount(n); ++s) {
      std::vector<double> x(n);
      for (int i = 0; i < n; ++i) x[i] = (s >> i) & 1U ? 1.0 : 0.0;
      const std::vector<double> u = RandomPoint(n, rng);
      ObservePoint(expectation, smooth, IndicatorDerivatives(table, s), x, u,
                   sigma, "x=1_" + MaskString(s));
    }
    for (int t = 0; t < options.samples; ++t) {
      const std::vector<double> x = RandomPoint(n, rng);
      const std::vector<double> u = RandomPoint(n, rng);
      if (std::accumulate(x.begin(), x.end(), 0.0) == 0.0) continue;
      ObservePoint(expectation, smooth, MultilinearAll(table, x), x, u, sigma,
                   "interior sample " + std::to_string(t));
    }
    out.push_back(expectation.Finish());
    out.push_back(smooth.Finish());
  } else {
    const std::string note = !gamma_ms ? "function is not gamma-MS"
                                       : "function is not supermodular";
    out.push_back(CheckAccumulator::Skipped("expectation_inequality", note));
    out.push_back(CheckAccumulator::Skipped("one_sided_smooth", note));
  }

  // x >= 1_S with |x|_1 <= alpha |S| and sigma = alpha * gamma.
  for (double alpha : options.alphas) {
    std::ostringstream suffix;
    suffix << "_alpha_" << alpha;
    if (!gamma_ms) {
      out.push_back(CheckAccumulator::Skipped(
          "subdomain_expectation" + suffix.str(), "function is not gamma-MS"));
      out.push_back(CheckAccumulator::Skipped(
          "subdomain_smooth" + suffix.str(), "function is not gamma-MS"));
      continue;
    }
    const double sigma = alpha * gamma;
    CheckAccumulator expectation("subdomain_expectation" + suffix.str(),
                                 options.tolerance);
    CheckAccumulator smooth("subdomain_smooth" + suffix.str(),
                            options.tolerance);
    for (int t = 0; t < options.samples; ++t) {
      uint64_t s = 0;
      while (s == 0) s = rng() & (MaskCount(n) - 1);
      std::vector<double> x = RandomPoint(n, rng);
      double free_mass = 0.0;
      for (int i = 0; i < n; ++i) {
        if ((s >> i) & 1U) {
          x[i] = 0.0;
        } else {
          free_mass += x[i];
        }
      }
      const double budget = (alpha - 1.0) * std::popcount(s);
      const double scale =
          free_mass > budget ? budget / free_mass : 1.0;
      for (int i = 0; i < n; ++i) x[i] = (s >> i) & 1U ? 1.0 : x[i] * scale;
      const std::vector<double> u = RandomPoint(n, rng);
      ObservePoint(expectation, smooth, MultilinearAll(table, x), x, u, sigma,
                   "S=" + MaskString(s) + " sample " + std::to_string(t));
    }
    out.push_back(expectation.Finish());
    out.push_back(smooth.Finish());
  }
  return out;
}

}  // namespace msls
