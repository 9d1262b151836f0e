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

// Game primitives for the two-type credence-goods market: a client with a
// minor or serious problem, an expert selling a cheap and an expensive
// treatment, and the client's best-response correspondence at a given
// posterior belief. Everything here is a pure function of immutable values.

#ifndef CREDENCE_MODEL_HPP_
#define CREDENCE_MODEL_HPP_

#include <array>
#include <cstdint>

#include "credence/errors.hpp"

namespace credence {

// Absolute tolerance for equality / indifference tests on money values.
// All quantities in the model are low-degree rational expressions of the
// inputs, so 1e-9 sits far below any economically meaningful gap.
inline constexpr double kMoneyTol = 1e-9;

// Tolerance for probability-space boundary tests (cutoffs, thresholds).
inline constexpr double kProbTol = 1e-12;

enum class ProblemType : int { kMinor = 0, kSerious = 1 };

// The client's three choices: walk away, buy the minor treatment, buy the
// serious treatment.
enum class Action : int { kNone = 0, kMinor = 1, kSerious = 2 };

inline constexpr std::array<Action, 3> kAllActions = {
    Action::kNone, Action::kMinor, Action::kSerious};

// Margin regions of the admissible price set P.
//   kMinorPremium  : p1 - c1 > p2 - c2
//   kEqualMargin   : p1 - c1 = p2 - c2
//   kSeriousPremium: p2 - c2 > p1 - c1
enum class PriceRegion : int { kMinorPremium = 0, kEqualMargin = 1, kSeriousPremium = 2 };

const char* price_region_name(PriceRegion r);

// Treatment costs (c1, c2) and losses from an untreated problem (l1, l2).
// Valid instances satisfy, strictly:
//   (ii)  c2 > c1          the serious treatment is more costly
//   (iii) l1 > c1, l2 > c2 both treatments are efficient
//   (iv)  l2 - c2 > l1 - c1  curing the serious problem has more surplus
struct ModelParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;

  double minor_margin_at(double p1) const { return p1 - c1; }
  double serious_margin_at(double p2) const { return p2 - c2; }

  // Prior cutoff (c2-c1)/(l2-l1): below it the no-credibility expert cannot
  // beat the equal-margin payoff l1-c1.
  double surplus_cutoff() const { return (c2 - c1) / (l2 - l1); }
};

// Validates the four assumption inequalities (strictly) and rejects
// non-finite inputs. Throws AssumptionViolation naming the first failure.
ModelParams validate_params(double c1, double c2, double l1, double l2);

// A price list inside P = {c1 <= p1 <= l1, c2 <= p2 <= l2, p2 >= p1}.
// Construction outside P throws InvalidPriceList; prices are never clamped.
class PriceList {
 public:
  PriceList(double p1, double p2, const ModelParams& params);

  double p1() const { return p1_; }
  double p2() const { return p2_; }

 private:
  double p1_;
  double p2_;
};

// A game instance: primitives, prior probability of the serious problem,
// and the expert's credibility (probability the experiment result is
// disclosed truthfully). chi in {0,1} is legal and routes to the
// benchmark formulas where relevant.
struct Scenario {
  ModelParams params;
  double prior = 0.5;        // mu0(t2), must lie in (0,1)
  double credibility = 0.5;  // chi, must lie in [0,1]
};

Scenario make_scenario(const ModelParams& params, double prior, double credibility);

// Expected client utility of action `a` at posterior q (probability of the
// serious problem), from the ex post payoff table:
//   none   -> -(1-q) l1 - q l2
//   minor  -> -p1 - q l2
//   serious-> -p2
double client_expected_utility(double q, Action a, const PriceList& p,
                               const ModelParams& params);

// Expert's margin from a sale: 0 / p1-c1 / p2-c2.
double expert_margin(Action a, const PriceList& p, const ModelParams& params);

// The client's set of optimal pure actions at posterior q, with
// tolerance-based tie detection. Mixed optima are convex combinations of
// this set and are not represented explicitly.
class BestResponseSet {
 public:
  bool contains(Action a) const { return member_[static_cast<int>(a)]; }
  int size() const { return count_; }
  // Members in the fixed order none, minor, serious.
  std::array<Action, 3> actions() const;

 private:
  friend BestResponseSet best_responses(double, const PriceList&, const ModelParams&);
  std::array<bool, 3> member_ = {false, false, false};
  int count_ = 0;
};

BestResponseSet best_responses(double q, const PriceList& p, const ModelParams& params);

// The member of the client's best-response set with the highest expert
// margin (the expert-preferred selection used throughout the solution
// concept). Prefers the serious treatment when margins tie.
Action expert_preferred(const BestResponseSet& set, const PriceList& p,
                        const ModelParams& params);

// Region classification by margin comparison with tolerance; exactly one
// tag per price list.
PriceRegion classify_region(const PriceList& p, const ModelParams& params);

}  // namespace credence

#endif  // CREDENCE_MODEL_HPP_
