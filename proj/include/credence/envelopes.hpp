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

// Belief-based value machinery: the expert's indirect utility v(q; p), its
// quasiconcave and concave envelopes, the belief cutoffs where the client
// switches treatments, the credibility threshold at which the payoff mode
// switches, and the discriminatory-pricing profit with its envelopes.
//
// Every envelope in this model is piecewise affine with at most three
// pieces and known kinks, so envelopes are stored as explicit breakpoint
// descriptions rather than function closures. That makes evaluation exact
// and equality tests meaningful.

#ifndef CREDENCE_ENVELOPES_HPP_
#define CREDENCE_ENVELOPES_HPP_

#include <vector>

#include "credence/model.hpp"

namespace credence {

// One affine piece, valid on [lo, hi].
struct AffinePiece {
  double lo = 0.0;
  double hi = 1.0;
  double slope = 0.0;
  double intercept = 0.0;

  double at(double q) const { return intercept + slope * q; }
};

// A piecewise-affine function on [0,1], upper semicontinuous by
// construction: adjacent pieces share an endpoint and evaluation at a
// shared endpoint takes the larger piece value. This matches the
// expert-preferred tie-breaking that makes v(.; p) usc.
class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<AffinePiece> pieces);

  double operator()(double q) const;
  const std::vector<AffinePiece>& pieces() const { return pieces_; }

 private:
  std::vector<AffinePiece> pieces_;
};

struct EnvelopePair {
  PiecewiseLinear qcav;  // lowest quasiconcave majorant of v(.; p)
  PiecewiseLinear cav;   // lowest concave majorant of v(.; p)
};

// Expert's belief-based indirect utility: the highest expert margin among
// the client's optimal actions at posterior q.
double indirect_utility(double q, const PriceList& p, const ModelParams& params);

// Smallest posterior at which the serious treatment enters the client's
// best-response set. Defined for equal-margin and serious-premium price
// lists; throws RegionError for minor-premium ones.
//
// Two cases depending on which action the serious treatment displaces at
// the cutoff: the no-purchase option ((p2-l1)/(l2-l1)) when
// p2 >= l2 - (l2-l1)/l1 * p1, otherwise the minor treatment ((p2-p1)/l2).
double serious_cutoff(const PriceList& p, const ModelParams& params);

// Largest posterior at which the minor treatment is still optimal, for
// minor-premium price lists. Same two-case structure as serious_cutoff.
double minor_cutoff(const PriceList& p, const ModelParams& params);

// Slope of cav v below the serious cutoff (equal-margin / serious-premium).
double cav_slope(const PriceList& p, const ModelParams& params);

// Slope magnitude of cav v above the minor cutoff (minor-premium), i.e.
// ((p1-c1)-(p2-c2))/(1 - minor_cutoff).
double cav_slope_minor(const PriceList& p, const ModelParams& params);

// Region-applicable cutoffs and slopes in one bundle; fields that do not
// apply to the price list's region are NaN.
struct Thresholds {
  double serious_cutoff;  // qbar
  double minor_cutoff;    // qtilde
  double cav_slope;
  double cav_slope_minor;
};

Thresholds thresholds(const PriceList& p, const ModelParams& params);

// Envelopes of v(.; p) for equal-margin / serious-premium price lists:
// qcav steps from p1-c1 to p2-c2 at the serious cutoff; cav replaces the
// low piece with the chord of slope cav_slope.
EnvelopePair envelopes_serious_premium(const PriceList& p, const ModelParams& params);

// Envelopes for minor-premium price lists: constant p1-c1 up to the minor
// cutoff, then a step down (qcav) or a descending chord into p2-c2 (cav).
EnvelopePair envelopes_minor_premium(const PriceList& p, const ModelParams& params);

// Region-dispatched version of the two builders above.
EnvelopePair value_envelopes(const PriceList& p, const ModelParams& params);

// Credibility threshold at which the p-equilibrium payoff mode switches
// from cheap talk to persuasion:
//   (qbar - q0) / (qbar (1 - q0))
// Defined for priors up to the serious cutoff (1 at 0, 0 at the cutoff);
// throws DomainError above it and RegionError for minor-premium prices.
double credibility_threshold(double prior, const PriceList& p, const ModelParams& params);

// Inverse of credibility_threshold in the prior: the lowest prior at which
// credibility chi supports the persuasion payoff,
//   qbar (1 - chi) / (1 - chi qbar).
double persuasion_floor(double chi, const PriceList& p, const ModelParams& params);

// Minor-premium analogue: the highest prior at which the persuasion payoff
// survives, qtilde / (1 - (1 - qtilde) chi).
double persuasion_ceiling(double chi, const PriceList& p, const ModelParams& params);

// Expert's profit under discriminatory pricing: the best margin available
// at a fixed posterior when prices may react to it,
//   max(0, (1-q0) l1 - c1, q0 l2 + (1-q0) l1 - c2).
double discriminatory_profit(double prior, const ModelParams& params);

// Envelopes of the discriminatory profit. Its quasiconcavification is the
// no-credibility equilibrium value; its concavification the
// full-credibility one.
EnvelopePair profit_envelopes(const ModelParams& params);

}  // namespace credence

#endif  // CREDENCE_ENVELOPES_HPP_
