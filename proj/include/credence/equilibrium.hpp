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

// Closed-form equilibrium machinery: the expert's value at fixed prices in
// every margin region, the optimal price list and equilibrium value
// surface, the optimal experiment and signalling strategy, the
// no-credibility and full-credibility benchmarks, and the
// public-credibility variant of the game.

#ifndef CREDENCE_EQUILIBRIUM_HPP_
#define CREDENCE_EQUILIBRIUM_HPP_

#include <array>
#include <vector>

#include "credence/envelopes.hpp"
#include "credence/model.hpp"

namespace credence {

// How the expert's value at fixed prices is attained:
//   kFlat       both envelopes coincide at the prior; disclosure is moot.
//   kCheapTalk  the quasiconcave (cheap-talk) envelope binds.
//   kPersuasion credibility is high enough for the concave envelope.
enum class PayoffMode : int { kFlat = 0, kCheapTalk = 1, kPersuasion = 2 };

const char* payoff_mode_name(PayoffMode m);

struct PEqValue {
  double value = 0.0;
  PayoffMode mode = PayoffMode::kFlat;
};

// Expert's equilibrium value of the fixed-price subgame.
//
// Equal margin: p2 - c2 everywhere. Serious premium: p2 - c2 at or above
// the serious cutoff, the concave envelope between the persuasion floor
// and the cutoff, p1 - c1 below the floor. Minor premium: mirrored, with
// the persuasion ceiling in place of the floor. The persuasion branch is
// taken at the boundary credibility (weak inequality).
PEqValue p_eq_value(const Scenario& s, const PriceList& p);

// Credibility level above which the expert benefits from credibility at
// all, ((c2-c1) - q0 (l2-l1)) / ((1-q0)(c2-c1)). Negative once the prior
// exceeds the surplus cutoff; callers compare against max(value, 0).
double benefit_threshold(double prior, const ModelParams& params);

struct OptimalPrices {
  bool unique = true;
  // The unique optimum, or the canonical equal-margin member of the
  // optimal family (l1, l1 - c1 + c2).
  PriceList prices;
  // The optimal p2 interval at p1 = l1; degenerate when unique.
  double p2_lo = 0.0;
  double p2_hi = 0.0;
  double value = 0.0;  // expert's equilibrium value at the optimum
};

// The price list(s) maximizing the expert's subgame value. Above the
// benefit threshold there is a unique optimum (l1, l1 + q0(l2-l1)/(1 - chi
// + chi q0)), pinned by making the credibility threshold bind exactly.
// Below it every (l1, p2) with p2 >= l1 - c1 + c2 is optimal and the
// equal-margin member is returned as canonical.
OptimalPrices optimal_prices(const Scenario& s);

// Expert's equilibrium value ev(q0, chi). Continuous on the whole domain;
// chi in {0,1} routes to the benchmark formulas.
double equilibrium_value(const Scenario& s);

enum class Benchmark { kNoCredibility, kFullCredibility };

// The chi = 0 (cheap-talk) and chi = 1 (full-commitment persuasion)
// equilibrium values: the quasiconcave and concave envelopes of the
// discriminatory profit.
double benchmark_value(double prior, Benchmark which, const ModelParams& params);

// A type-conditional distribution over a finite message alphabet. Rows
// must be nonnegative and sum to one within 1e-12.
class Kernel {
 public:
  Kernel(std::vector<double> minor_row, std::vector<double> serious_row);

  // Two messages; message i reveals the type with index i.
  static Kernel fully_revealing();
  // All mass on one message for both types, e.g. the non-credible expert's
  // always-send-the-favorable-message strategy.
  static Kernel point_mass(int message, int num_messages);

  int num_messages() const { return static_cast<int>(rows_[0].size()); }
  double prob(ProblemType t, int message) const {
    return rows_[static_cast<int>(t)][message];
  }
  const std::vector<double>& row(ProblemType t) const {
    return rows_[static_cast<int>(t)];
  }

 private:
  std::array<std::vector<double>, 2> rows_;
};

using Experiment = Kernel;
using SignallingStrategy = Kernel;

// A persuasion-mode disclosure plan: the experiment, the non-credible
// expert's signalling strategy, and the client actions message by message.
struct PersuasionProfile {
  Experiment experiment;
  SignallingStrategy signalling;
  std::vector<Action> client_actions;
};

// The expert's optimal experiment in persuasion mode (the value strictly
// above the cheap-talk envelope). For serious-premium prices the
// experiment sends the low message on the minor type with probability
// credibility_threshold/chi and the high message otherwise, and the
// non-credible expert always sends the high message; at the threshold
// credibility this is exactly fully revealing. Minor-premium prices get
// the mirrored construction. Throws ModeError outside persuasion mode.
PersuasionProfile optimal_experiment(const Scenario& s, const PriceList& p);

struct OutcomeAtom {
  double posterior = 0.0;
  double expert_payoff = 0.0;
  double weight = 0.0;
};

// The joint distribution of (client posterior, expert payoff) induced by
// the engine's canonical equilibrium of the fixed-price subgame.
struct OutcomeDistribution {
  PayoffMode mode = PayoffMode::kFlat;
  std::vector<OutcomeAtom> atoms;

  double mean_posterior() const;
  double expert_value() const;
};

// Persuasion mode yields the unique two-atom support {(0, p1-c1),
// (qbar, p2-c2)} with weights forced by Bayes plausibility (independent of
// chi). Cheap-talk mode returns the canonical equal-value split; flat mode
// a single no-disclosure atom, except equal-margin prices where the
// canonical equilibrium fully discloses.
OutcomeDistribution outcome_distribution(const Scenario& s, const PriceList& p);

// Public credibility: the credibility draw is observed by the client, so
// the subgame value is the chi-mixture of the two envelopes.
double public_credibility_value(const Scenario& s, const PriceList& p);

struct PublicCredibilityOptimum {
  std::vector<PriceList> prices;  // one or, at the kink prior, two optima
  double value = 0.0;
};

// Optimal prices under public credibility: p1 = l1 and p2 either the full
// loss l2 or the monopoly price q0 l2 + (1-q0) l1, depending on the prior
// relative to the kink (c2-c1)/((1-chi)(l2-l1) + chi(c2-c1)).
PublicCredibilityOptimum public_credibility_optimum(const Scenario& s);

// Checks the dominance that removes minor-premium prices from the
// expert's menu: the subgame value of a minor-premium price list is
// strictly below the value of the canonical equal-margin list
// (l1, l1-c1+c2). Throws RegionError off the minor-premium region.
bool equal_margin_dominates(const Scenario& s, const PriceList& p);

// The canonical equal-margin price list (l1, l1 - c1 + c2).
PriceList canonical_equal_margin_prices(const ModelParams& params);

}  // namespace credence

#endif  // CREDENCE_EQUILIBRIUM_HPP_
