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

#include "credence/envelopes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace credence {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_not_minor_premium(const PriceList& p, const ModelParams& params,
                               const char* op) {
  if (classify_region(p, params) == PriceRegion::kMinorPremium) {
    throw RegionError(std::string(op) + " requires an equal-margin or serious-premium price list");
  }
}

void require_minor_premium(const PriceList& p, const ModelParams& params,
                           const char* op) {
  if (classify_region(p, params) != PriceRegion::kMinorPremium) {
    throw RegionError(std::string(op) + " requires a minor-premium price list");
  }
}

// Case split shared by both cutoffs: above the line
// p2 = l2 - (l2-l1)/l1 * p1 the cutoff's displaced action is no-purchase,
// below it the two treatments displace each other directly.
bool displaces_no_purchase(const PriceList& p, const ModelParams& params) {
  return p.p2() >= params.l2 - (params.l2 - params.l1) / params.l1 * p.p1();
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<AffinePiece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("piecewise function needs pieces");
}

double PiecewiseLinear::operator()(double q) const {
  double best = -std::numeric_limits<double>::infinity();
  bool covered = false;
  for (const AffinePiece& piece : pieces_) {
    if (q < piece.lo || q > piece.hi) continue;
    covered = true;
    best = std::max(best, piece.at(q));
  }
  if (!covered) throw DomainError("piecewise evaluation outside [0,1]");
  return best;
}

double indirect_utility(double q, const PriceList& p, const ModelParams& params) {
  return expert_margin(expert_preferred(best_responses(q, p, params), p, params),
                       p, params);
}

double serious_cutoff(const PriceList& p, const ModelParams& params) {
  require_not_minor_premium(p, params, "serious_cutoff");
  if (displaces_no_purchase(p, params)) {
    return (p.p2() - params.l1) / (params.l2 - params.l1);
  }
  return (p.p2() - p.p1()) / params.l2;
}

double minor_cutoff(const PriceList& p, const ModelParams& params) {
  require_minor_premium(p, params, "minor_cutoff");
  if (displaces_no_purchase(p, params)) {
    return (params.l1 - p.p1()) / params.l1;
  }
  return (p.p2() - p.p1()) / params.l2;
}

double cav_slope(const PriceList& p, const ModelParams& params) {
  // The serious cutoff is strictly positive everywhere on the equal-margin
  // and serious-premium regions, so the ratio is well defined.
  double qbar = serious_cutoff(p, params);
  double gap = params.serious_margin_at(p.p2()) - params.minor_margin_at(p.p1());
  return gap / qbar;
}

double cav_slope_minor(const PriceList& p, const ModelParams& params) {
  double qtilde = minor_cutoff(p, params);
  double gap = params.minor_margin_at(p.p1()) - params.serious_margin_at(p.p2());
  return gap / (1.0 - qtilde);
}

Thresholds thresholds(const PriceList& p, const ModelParams& params) {
  Thresholds t{kNaN, kNaN, kNaN, kNaN};
  if (classify_region(p, params) == PriceRegion::kMinorPremium) {
    t.minor_cutoff = minor_cutoff(p, params);
    t.cav_slope_minor = cav_slope_minor(p, params);
  } else {
    t.serious_cutoff = serious_cutoff(p, params);
    t.cav_slope = cav_slope(p, params);
  }
  return t;
}

EnvelopePair envelopes_serious_premium(const PriceList& p, const ModelParams& params) {
  require_not_minor_premium(p, params, "envelopes_serious_premium");
  double minor = params.minor_margin_at(p.p1());
  double serious = params.serious_margin_at(p.p2());
  if (classify_region(p, params) == PriceRegion::kEqualMargin) {
    PiecewiseLinear flat({AffinePiece{0.0, 1.0, 0.0, serious}});
    return EnvelopePair{flat, flat};
  }
  double qbar = serious_cutoff(p, params);
  PiecewiseLinear qcav({AffinePiece{0.0, qbar, 0.0, minor},
                        AffinePiece{qbar, 1.0, 0.0, serious}});
  PiecewiseLinear cav({AffinePiece{0.0, qbar, (serious - minor) / qbar, minor},
                       AffinePiece{qbar, 1.0, 0.0, serious}});
  return EnvelopePair{std::move(qcav), std::move(cav)};
}

EnvelopePair envelopes_minor_premium(const PriceList& p, const ModelParams& params) {
  require_minor_premium(p, params, "envelopes_minor_premium");
  double minor = params.minor_margin_at(p.p1());
  double serious = params.serious_margin_at(p.p2());
  double qtilde = minor_cutoff(p, params);
  PiecewiseLinear qcav({AffinePiece{0.0, qtilde, 0.0, minor},
                        AffinePiece{qtilde, 1.0, 0.0, serious}});
  // Chord from (qtilde, minor) down to (1, serious): written as
  // slope * q + intercept with slope -(minor-serious)/(1-qtilde).
  double slope = -(minor - serious) / (1.0 - qtilde);
  PiecewiseLinear cav({AffinePiece{0.0, qtilde, 0.0, minor},
                       AffinePiece{qtilde, 1.0, slope, serious - slope}});
  return EnvelopePair{std::move(qcav), std::move(cav)};
}

EnvelopePair value_envelopes(const PriceList& p, const ModelParams& params) {
  if (classify_region(p, params) == PriceRegion::kMinorPremium) {
    return envelopes_minor_premium(p, params);
  }
  return envelopes_serious_premium(p, params);
}

double credibility_threshold(double prior, const PriceList& p, const ModelParams& params) {
  require_not_minor_premium(p, params, "credibility_threshold");
  double qbar = serious_cutoff(p, params);
  if (prior > qbar + kProbTol) {
    throw DomainError("credibility_threshold needs a prior at or below the serious cutoff");
  }
  if (prior >= qbar) return 0.0;
  return (qbar - prior) / (qbar * (1.0 - prior));
}

double persuasion_floor(double chi, const PriceList& p, const ModelParams& params) {
  double qbar = serious_cutoff(p, params);
  double denom = 1.0 - chi * qbar;
  if (denom <= 0.0) return 0.0;  // only at chi = 1 with the cutoff at 1
  return qbar * (1.0 - chi) / denom;
}

double persuasion_ceiling(double chi, const PriceList& p, const ModelParams& params) {
  double qtilde = minor_cutoff(p, params);
  double denom = 1.0 - (1.0 - qtilde) * chi;
  if (denom <= 0.0) return 1.0;  // only at chi = 1 with the cutoff at 0
  return qtilde / denom;
}

double discriminatory_profit(double prior, const ModelParams& params) {
  double sell_minor = (1.0 - prior) * params.l1 - params.c1;
  double sell_serious = prior * params.l2 + (1.0 - prior) * params.l1 - params.c2;
  return std::max({0.0, sell_minor, sell_serious});
}

EnvelopePair profit_envelopes(const ModelParams& params) {
  double em = params.l1 - params.c1;  // equal-margin payoff, the low plateau
  double kink = params.surplus_cutoff();
  PiecewiseLinear qcav({AffinePiece{0.0, kink, 0.0, em},
                        AffinePiece{kink, 1.0, params.l2 - params.l1, params.l1 - params.c2}});
  PiecewiseLinear cav({AffinePiece{0.0, 1.0, (params.l2 - params.c2) - em, em}});
  return EnvelopePair{std::move(qcav), std::move(cav)};
}

}  // namespace credence
