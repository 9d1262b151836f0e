// Copyright 2026 The Credence Authors.
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

// Test-side oracles, kept independent of the closed forms they check:
// payoffs come straight from the ex post payoff table, best responses from
// enumeration, cutoffs from bisection on the enumerated correspondence,
// and envelopes from hull / prefix-max constructions over sampled beliefs.

#ifndef CREDENCE_TESTS_SUPPORT_HPP_
#define CREDENCE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "credence/model.hpp"
#include "credence/rng.hpp"

namespace brute {

using credence::Action;
using credence::ModelParams;

inline constexpr double kTieTol = 1e-9;

inline bool near(double a, double b, double atol = 1e-9) {
  return std::fabs(a - b) <= atol;
}

// Ex post payoff table, written out cell by cell.
inline double table_client_payoff(bool serious_problem, Action a, double p1,
                                  double p2, const ModelParams& par) {
  if (!serious_problem) {
    if (a == Action::kNone) return -par.l1;
    if (a == Action::kMinor) return -p1;
    return -p2;
  }
  if (a == Action::kNone) return -par.l2;
  if (a == Action::kMinor) return -p1 - par.l2;
  return -p2;
}

inline double table_expert_payoff(Action a, double p1, double p2,
                                  const ModelParams& par) {
  if (a == Action::kNone) return 0.0;
  if (a == Action::kMinor) return p1 - par.c1;
  return p2 - par.c2;
}

// Expected client utility by averaging the two table rows under q.
inline double expected_client_payoff(double q, Action a, double p1, double p2,
                                     const ModelParams& par) {
  return (1.0 - q) * table_client_payoff(false, a, p1, p2, par) +
         q * table_client_payoff(true, a, p1, p2, par);
}

inline std::vector<Action> best_actions(double q, double p1, double p2,
                                        const ModelParams& par) {
  double best = -1e300;
  for (Action a : credence::kAllActions) {
    best = std::max(best, expected_client_payoff(q, a, p1, p2, par));
  }
  std::vector<Action> out;
  for (Action a : credence::kAllActions) {
    if (expected_client_payoff(q, a, p1, p2, par) >= best - kTieTol) out.push_back(a);
  }
  return out;
}

// Expert's indirect utility by enumeration (expert-preferred tie-break).
inline double value_at(double q, double p1, double p2, const ModelParams& par) {
  double v = -1e300;
  for (Action a : best_actions(q, p1, p2, par)) {
    v = std::max(v, table_expert_payoff(a, p1, p2, par));
  }
  return v;
}

// Worst expert payoff among client optima (adversarial tie-break).
inline double worst_value_at(double q, double p1, double p2, const ModelParams& par) {
  double v = 1e300;
  for (Action a : best_actions(q, p1, p2, par)) {
    v = std::min(v, table_expert_payoff(a, p1, p2, par));
  }
  return v;
}

// Smallest belief at which the serious treatment is a best response; the
// membership predicate is monotone in q, so bisection applies.
inline double bisect_serious_entry(double p1, double p2, const ModelParams& par) {
  auto is_in = [&](double q) {
    for (Action a : best_actions(q, p1, p2, par)) {
      if (a == Action::kSerious) return true;
    }
    return false;
  };
  if (is_in(0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (is_in(mid) ? hi : lo) = mid;
  }
  return hi;
}

// Beliefs where two actions swap rank: roots of the pairwise expected
// payoff differences (affine in q), found from their endpoint values.
inline std::vector<double> indifference_beliefs(double p1, double p2,
                                                const ModelParams& par) {
  std::vector<double> out;
  const Action acts[3] = {Action::kNone, Action::kMinor, Action::kSerious};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      double f0 = expected_client_payoff(0.0, acts[i], p1, p2, par) -
                  expected_client_payoff(0.0, acts[j], p1, p2, par);
      double f1 = expected_client_payoff(1.0, acts[i], p1, p2, par) -
                  expected_client_payoff(1.0, acts[j], p1, p2, par);
      if (f0 == f1) continue;
      double root = f0 / (f0 - f1);
      if (root > 0.0 && root < 1.0) out.push_back(root);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SampledValue {
  std::vector<double> q;
  std::vector<double> v;
};

// Samples the indirect utility on a uniform grid with the indifference
// beliefs injected, so the hull constructions below are exact for this
// piecewise-constant correspondence.
inline SampledValue sample_value(double p1, double p2, const ModelParams& par,
                                 int n = 2001) {
  std::vector<double> qs;
  qs.reserve(n + 4);
  for (int i = 0; i < n; ++i) qs.push_back(static_cast<double>(i) / (n - 1));
  for (double k : indifference_beliefs(p1, p2, par)) qs.push_back(k);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  SampledValue s;
  s.q = qs;
  s.v.reserve(qs.size());
  for (double q : qs) s.v.push_back(value_at(q, p1, p2, par));
  return s;
}

// Exact two-point concavification of the sampled points: the upper concave
// hull, evaluated by chord interpolation. Maximizing over all binary
// splits of q among sampled beliefs gives the same function.
class CavOracle {
 public:
  explicit CavOracle(const SampledValue& s) {
    for (size_t i = 0; i < s.q.size(); ++i) push(s.q[i], s.v[i]);
  }

  double operator()(double q) const {
    auto it = std::upper_bound(hx_.begin(), hx_.end(), q);
    size_t j = std::min(static_cast<size_t>(it - hx_.begin()), hx_.size() - 1);
    if (j == 0) return hv_[0];
    double t = (q - hx_[j - 1]) / (hx_[j] - hx_[j - 1]);
    return hv_[j - 1] + t * (hv_[j] - hv_[j - 1]);
  }

 private:
  void push(double x, double y) {
    while (hx_.size() >= 2) {
      size_t n = hx_.size();
      double s1 = (hv_[n - 1] - hv_[n - 2]) / (hx_[n - 1] - hx_[n - 2]);
      double s2 = (y - hv_[n - 2]) / (x - hx_[n - 2]);
      if (s2 < s1) break;  // hull turns properly; keep the middle point
      hx_.pop_back();
      hv_.pop_back();
    }
    if (!hx_.empty() && x == hx_.back()) {
      hv_.back() = std::max(hv_.back(), y);
      return;
    }
    hx_.push_back(x);
    hv_.push_back(y);
  }

  std::vector<double> hx_, hv_;
};

// Quasiconcavification over the sample: at q the best attainable
// min(v(x), v(y)) with x <= q <= y is min(prefix max, suffix max).
class QcavOracle {
 public:
  explicit QcavOracle(const SampledValue& s) : s_(s) {
    prefix_ = s.v;
    for (size_t i = 1; i < prefix_.size(); ++i) prefix_[i] = std::max(prefix_[i], prefix_[i - 1]);
    suffix_ = s.v;
    for (size_t i = suffix_.size() - 1; i-- > 0;) suffix_[i] = std::max(suffix_[i], suffix_[i + 1]);
  }

  double operator()(double q, double v_at_q) const {
    auto it = std::upper_bound(s_.q.begin(), s_.q.end(), q);
    double left = v_at_q, right = v_at_q;
    if (it != s_.q.begin()) left = std::max(left, prefix_[it - s_.q.begin() - 1]);
    auto lo = std::lower_bound(s_.q.begin(), s_.q.end(), q);
    if (lo != s_.q.end()) right = std::max(right, suffix_[lo - s_.q.begin()]);
    return std::min(left, right);
  }

 private:
  SampledValue s_;
  std::vector<double> prefix_, suffix_;
};

// Discriminatory profit by brute force over a price grid.
inline double profit_grid(double q0, const ModelParams& par, int steps = 101) {
  double best = 0.0;
  for (int i = 0; i < steps; ++i) {
    double p1 = par.c1 + (par.l1 - par.c1) * static_cast<double>(i) / (steps - 1);
    for (int j = 0; j < steps; ++j) {
      double p2 = par.c2 + (par.l2 - par.c2) * static_cast<double>(j) / (steps - 1);
      if (p2 < p1) continue;
      best = std::max(best, value_at(q0, p1, p2, par));
    }
  }
  return best;
}

// --- deterministic random instances -------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * gen_.next_unit(); }
  std::uint64_t raw() { return gen_.next(); }

 private:
  credence::SplitMix64 gen_;
};

inline ModelParams random_params(Rng& rng) {
  double c1 = rng.uniform(0.2, 3.0);
  double cost_gap = rng.uniform(0.3, 2.5);     // c2 - c1
  double minor_surplus = rng.uniform(0.4, 2.5);  // l1 - c1
  double extra = rng.uniform(0.2, 3.0);          // (l2-c2) - (l1-c1)
  return credence::validate_params(c1, c1 + cost_gap, c1 + minor_surplus,
                                   c1 + cost_gap + minor_surplus + extra);
}

// A price list with the serious margin strictly above the minor margin.
inline credence::PriceList random_serious_premium(Rng& rng, const ModelParams& par) {
  double m1 = rng.uniform(0.0, par.l1 - par.c1);
  double m2_hi = par.l2 - par.c2;
  double m2 = m1 + (m2_hi - m1) * rng.uniform(0.05, 1.0);
  return credence::PriceList(par.c1 + m1, par.c2 + m2, par);
}

// A price list with the minor margin strictly on top.
inline credence::PriceList random_minor_premium(Rng& rng, const ModelParams& par) {
  double m1 = rng.uniform(0.25, 1.0) * (par.l1 - par.c1);
  double m2_lo = std::max(0.0, m1 - (par.c2 - par.c1));
  double m2 = m2_lo + (m1 - m2_lo) * rng.uniform(0.0, 0.9);
  return credence::PriceList(par.c1 + m1, par.c2 + m2, par);
}

// Interior equal-margin list (p1 strictly below l1, so the minor-side
// cutoff stays away from zero).
inline credence::PriceList random_equal_margin(Rng& rng, const ModelParams& par) {
  double m = rng.uniform(0.05, 0.95) * (par.l1 - par.c1);
  return credence::PriceList(par.c1 + m, par.c2 + m, par);
}

}  // namespace brute

#endif  // CREDENCE_TESTS_SUPPORT_HPP_
