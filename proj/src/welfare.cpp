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

#include "credence/welfare.hpp"

#include <algorithm>
#include <cmath>

namespace credence {

namespace {

// The minor-side cutoff formula evaluated without a region gate: on the
// equal-margin set it is the limit of the minor-premium cutoff.
double minor_cutoff_formula(const PriceList& p, const ModelParams& par) {
  if (p.p2() >= par.l2 - (par.l2 - par.l1) / par.l1 * p.p1()) {
    return (par.l1 - p.p1()) / par.l1;
  }
  return (p.p2() - p.p1()) / par.l2;
}

bool in_multiple_equilibrium_regime(const Scenario& s) {
  return s.prior <= s.params.surplus_cutoff() + kProbTol &&
         s.credibility <= benefit_threshold(s.prior, s.params) + kProbTol;
}

}  // namespace

double total_surplus(double prior, const ModelParams& params) {
  return prior * (params.l2 - params.c2) + (1.0 - prior) * (params.l1 - params.c1);
}

double outside_option(double prior, const ModelParams& params) {
  return -(1.0 - prior) * params.l1 - prior * params.l2;
}

ClientValueSet client_value_set(const Scenario& s) {
  if (!in_multiple_equilibrium_regime(s)) return {0.0, 0.0};
  return {0.0, total_surplus(s.prior, s.params) - equilibrium_value(s)};
}

double client_best_value(const Scenario& s) {
  if (!in_multiple_equilibrium_regime(s)) return 0.0;
  return s.prior * ((s.params.l2 - s.params.c2) - (s.params.l1 - s.params.c1));
}

double client_value_at_prices(double prior, const PriceList& p, const ModelParams& par) {
  switch (classify_region(p, par)) {
    case PriceRegion::kSeriousPremium: {
      double qb = serious_cutoff(p, par);
      if (prior >= qb) return prior * par.l2 + (1.0 - prior) * par.l1 - p.p2();
      return (1.0 - prior / qb) * (par.l1 - p.p1()) +
             (prior / qb) * (qb * par.l2 + (1.0 - qb) * par.l1 - p.p2());
    }
    case PriceRegion::kMinorPremium: {
      double qt = minor_cutoff(p, par);
      if (prior <= qt) return (1.0 - prior) * par.l1 - p.p1();
      return ((1.0 - prior) / (1.0 - qt)) * ((1.0 - qt) * par.l1 - p.p1()) +
             ((prior - qt) / (1.0 - qt)) * (par.l2 - p.p2());
    }
    case PriceRegion::kEqualMargin:
      return prior * (par.l2 - p.p2()) + (1.0 - prior) * (par.l1 - p.p1());
  }
  return 0.0;
}

DiscontinuityGaps discontinuity_gaps(double prior, const PriceList& pbar,
                                     const ModelParams& par) {
  if (classify_region(pbar, par) != PriceRegion::kEqualMargin) {
    throw RegionError("discontinuity gaps are taken at equal-margin price lists");
  }
  double p1 = pbar.p1();
  double p2 = pbar.p2();
  double qt = minor_cutoff_formula(pbar, par);
  double qb = serious_cutoff(pbar, par);

  DiscontinuityGaps g;
  g.minor_flat_candidate = prior * (par.l2 + p1 - p2);
  g.minor_chord_candidate = (1.0 - prior) * (qt / (1.0 - qt)) * (par.l2 + p1 - p2);
  g.serious_flat_candidate = (1.0 - prior) * (p2 - p1);
  g.serious_chord_candidate = prior * (p2 - p1) * (1.0 - qb) / qb;
  // limsup of the directional limits = the larger limit = the smaller gap.
  g.from_minor_region = std::min(g.minor_flat_candidate, g.minor_chord_candidate);
  g.from_serious_region = std::min(g.serious_flat_candidate, g.serious_chord_candidate);
  return g;
}

DisclosureProfile equal_margin_split_profile(const Scenario& s, double q2) {
  const double q0 = s.prior;
  if (!(q2 > q0 - kProbTol && q2 <= 1.0)) {
    throw DomainError("split posterior must lie in (prior, 1]");
  }
  if (q2 < s.params.surplus_cutoff() - kProbTol) {
    throw DomainError("split posterior below the surplus cutoff cannot support a serious sale");
  }
  // Message 0 reveals the minor type; message 1 carries posterior q2.
  double reveal = (q2 - q0) / (q2 * (1.0 - q0));
  Experiment xi({reveal, 1.0 - reveal}, {0.0, 1.0});
  return DisclosureProfile{xi, xi, {Action::kMinor, Action::kSerious}};
}

double equal_margin_split_client_value(const Scenario& s, double q2) {
  const ModelParams& par = s.params;
  double p2 = par.l1 - par.c1 + par.c2;
  double w_high = s.prior / q2;
  double payoff = (1.0 - w_high) * (-par.l1) + w_high * (-p2);
  return payoff - outside_option(s.prior, par);
}

}  // namespace credence
