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

// Client welfare: total surplus, the set of client equilibrium values, the
// client's highest equilibrium value with and without exogenous prices,
// and the welfare discontinuities at equal-margin price lists.
//
// The client's "value" is always measured against her outside option of
// never buying at the prior; that term lives in one helper here.

#ifndef CREDENCE_WELFARE_HPP_
#define CREDENCE_WELFARE_HPP_

#include "credence/equilibrium.hpp"
#include "credence/model.hpp"

namespace credence {

// Total surplus of the efficient allocation, q0 (l2-c2) + (1-q0)(l1-c1).
double total_surplus(double prior, const ModelParams& params);

// Ex ante client payoff from always walking away, -(1-q0) l1 - q0 l2.
double outside_option(double prior, const ModelParams& params);

// The interval of client equilibrium values across all equilibria of the
// whole game; degenerate at {0} whenever the optimal price list is unique.
struct ClientValueSet {
  double lo = 0.0;
  double hi = 0.0;
};

ClientValueSet client_value_set(const Scenario& s);

// Client's highest equilibrium value: q0 ((l2-c2) - (l1-c1)) in the
// multiple-equilibrium regime (prior at most the surplus cutoff and
// credibility at most the benefit threshold), zero otherwise.
double client_best_value(const Scenario& s);

// Client's highest payoff among expert-optimal equilibria of the
// fixed-price subgame, relative to the outside option. Region-dispatched
// piecewise form; structurally independent of credibility, which is why
// this function does not take a scenario.
double client_value_at_prices(double prior, const PriceList& p, const ModelParams& params);

// Welfare drop when prices leave the equal-margin set. Each side of the
// set has two directional limits of client_value_at_prices depending on
// where the prior sits relative to the limiting cutoff; both gap closed
// forms are exposed, and the headline gaps take the binding (smaller) one.
struct DiscontinuityGaps {
  double from_minor_region = 0.0;    // u*(pbar) - limsup over minor-premium approaches
  double from_serious_region = 0.0;  // u*(pbar) - limsup over serious-premium approaches
  double minor_flat_candidate = 0.0;     // q0 (l2 + p1 - p2)
  double minor_chord_candidate = 0.0;    // (1-q0) qt/(1-qt) (l2 + p1 - p2)
  double serious_flat_candidate = 0.0;   // (1-q0)(p2 - p1)
  double serious_chord_candidate = 0.0;  // q0 (p2 - p1)(1-qb)/qb
};

// Throws RegionError unless pbar has equal margins.
DiscontinuityGaps discontinuity_gaps(double prior, const PriceList& pbar,
                                     const ModelParams& params);

// The partial-disclosure profile at the canonical equal-margin price list
// that induces posteriors {0, q2} with the experiment doubling as the
// signalling strategy. Sweeping q2 from the surplus cutoff to 1 moves the
// client's value continuously from 0 to its maximum.
struct DisclosureProfile {
  Experiment experiment;
  SignallingStrategy signalling;
  std::vector<Action> client_actions;
};

DisclosureProfile equal_margin_split_profile(const Scenario& s, double q2);

// Client value achieved by equal_margin_split_profile at q2, in closed form.
double equal_margin_split_client_value(const Scenario& s, double q2);

}  // namespace credence

#endif  // CREDENCE_WELFARE_HPP_
