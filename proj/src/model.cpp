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

#include "credence/model.hpp"

#include <cmath>
#include <string>

namespace credence {

const char* assumption_name(Assumption a) {
  switch (a) {
    case Assumption::kCostOrder: return "c2 > c1";
    case Assumption::kMinorEfficient: return "l1 > c1";
    case Assumption::kSeriousEfficient: return "l2 > c2";
    case Assumption::kSurplusOrder: return "l2 - c2 > l1 - c1";
  }
  return "?";
}

const char* price_region_name(PriceRegion r) {
  switch (r) {
    case PriceRegion::kMinorPremium: return "minor-premium";
    case PriceRegion::kEqualMargin: return "equal-margin";
    case PriceRegion::kSeriousPremium: return "serious-premium";
  }
  return "?";
}

ModelParams validate_params(double c1, double c2, double l1, double l2) {
  if (!(std::isfinite(c1) && std::isfinite(c2) && std::isfinite(l1) && std::isfinite(l2))) {
    throw std::invalid_argument("model parameters must be finite");
  }
  if (!(c2 > c1)) throw AssumptionViolation(Assumption::kCostOrder);
  if (!(l1 > c1)) throw AssumptionViolation(Assumption::kMinorEfficient);
  if (!(l2 > c2)) throw AssumptionViolation(Assumption::kSeriousEfficient);
  if (!(l2 - c2 > l1 - c1)) throw AssumptionViolation(Assumption::kSurplusOrder);
  return ModelParams{c1, c2, l1, l2};
}

PriceList::PriceList(double p1, double p2, const ModelParams& params)
    : p1_(p1), p2_(p2) {
  if (!(std::isfinite(p1) && std::isfinite(p2))) {
    throw InvalidPriceList("prices must be finite");
  }
  if (p1 < params.c1 - kMoneyTol || p1 > params.l1 + kMoneyTol ||
      p2 < params.c2 - kMoneyTol || p2 > params.l2 + kMoneyTol ||
      p2 < p1 - kMoneyTol) {
    throw InvalidPriceList("price list (" + std::to_string(p1) + ", " +
                           std::to_string(p2) + ") lies outside P");
  }
}

Scenario make_scenario(const ModelParams& params, double prior, double credibility) {
  if (!(prior > 0.0 && prior < 1.0)) {
    throw DomainError("prior must lie strictly inside (0,1)");
  }
  if (!(credibility >= 0.0 && credibility <= 1.0)) {
    throw DomainError("credibility must lie in [0,1]");
  }
  return Scenario{params, prior, credibility};
}

double client_expected_utility(double q, Action a, const PriceList& p,
                               const ModelParams& params) {
  switch (a) {
    case Action::kNone: return -(1.0 - q) * params.l1 - q * params.l2;
    case Action::kMinor: return -p.p1() - q * params.l2;
    case Action::kSerious: return -p.p2();
  }
  return 0.0;
}

double expert_margin(Action a, const PriceList& p, const ModelParams& params) {
  switch (a) {
    case Action::kNone: return 0.0;
    case Action::kMinor: return p.p1() - params.c1;
    case Action::kSerious: return p.p2() - params.c2;
  }
  return 0.0;
}

std::array<Action, 3> BestResponseSet::actions() const {
  std::array<Action, 3> out{};
  int n = 0;
  for (Action a : kAllActions) {
    if (member_[static_cast<int>(a)]) out[n++] = a;
  }
  return out;
}

BestResponseSet best_responses(double q, const PriceList& p, const ModelParams& params) {
  double best = client_expected_utility(q, kAllActions[0], p, params);
  std::array<double, 3> util{};
  for (Action a : kAllActions) {
    double u = client_expected_utility(q, a, p, params);
    util[static_cast<int>(a)] = u;
    if (u > best) best = u;
  }
  BestResponseSet set;
  for (Action a : kAllActions) {
    if (util[static_cast<int>(a)] >= best - kMoneyTol) {
      set.member_[static_cast<int>(a)] = true;
      ++set.count_;
    }
  }
  return set;
}

Action expert_preferred(const BestResponseSet& set, const PriceList& p,
                        const ModelParams& params) {
  Action pick = Action::kNone;
  double best = -1.0;
  // Scan in action order so that an exact margin tie resolves to the
  // serious treatment.
  for (Action a : kAllActions) {
    if (!set.contains(a)) continue;
    double m = expert_margin(a, p, params);
    if (m >= best) {
      best = m;
      pick = a;
    }
  }
  return pick;
}

PriceRegion classify_region(const PriceList& p, const ModelParams& params) {
  double minor = params.minor_margin_at(p.p1());
  double serious = params.serious_margin_at(p.p2());
  if (minor > serious + kMoneyTol) return PriceRegion::kMinorPremium;
  if (serious > minor + kMoneyTol) return PriceRegion::kSeriousPremium;
  return PriceRegion::kEqualMargin;
}

}  // namespace credence
