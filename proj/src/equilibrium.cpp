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

#include "credence/equilibrium.hpp"

#include <algorithm>
#include <cmath>

namespace credence {

namespace {

// Smallest posterior at which the serious treatment is optimal for a
// minor-premium price list. In the regime where the cutoffs displace the
// no-purchase option there is a no-sale belief interval between the minor
// cutoff and this entry point.
double serious_entry_minor_premium(const PriceList& p, const ModelParams& params) {
  if (p.p2() >= params.l2 - (params.l2 - params.l1) / params.l1 * p.p1()) {
    return (p.p2() - params.l1) / (params.l2 - params.l1);
  }
  return minor_cutoff(p, params);
}

}  // namespace

const char* payoff_mode_name(PayoffMode m) {
  switch (m) {
    case PayoffMode::kFlat: return "flat";
    case PayoffMode::kCheapTalk: return "cheap-talk";
    case PayoffMode::kPersuasion: return "persuasion";
  }
  return "?";
}

PEqValue p_eq_value(const Scenario& s, const PriceList& p) {
  const ModelParams& par = s.params;
  const double q0 = s.prior;
  const double chi = s.credibility;
  const double minor = par.minor_margin_at(p.p1());
  const double serious = par.serious_margin_at(p.p2());

  switch (classify_region(p, par)) {
    case PriceRegion::kEqualMargin:
      return {serious, PayoffMode::kFlat};

    case PriceRegion::kSeriousPremium: {
      double qbar = serious_cutoff(p, par);
      if (q0 >= qbar - kProbTol) return {serious, PayoffMode::kFlat};
      double threshold = credibility_threshold(q0, p, par);
      if (chi >= threshold - kProbTol) {
        return {cav_slope(p, par) * q0 + minor, PayoffMode::kPersuasion};
      }
      return {minor, PayoffMode::kCheapTalk};
    }

    case PriceRegion::kMinorPremium: {
      double qtilde = minor_cutoff(p, par);
      if (q0 <= qtilde + kProbTol) return {minor, PayoffMode::kFlat};
      if (q0 <= persuasion_ceiling(chi, p, par) + kProbTol) {
        return {cav_slope_minor(p, par) * (1.0 - q0) + serious, PayoffMode::kPersuasion};
      }
      return {serious, PayoffMode::kCheapTalk};
    }
  }
  return {0.0, PayoffMode::kFlat};
}

double benefit_threshold(double prior, const ModelParams& params) {
  double spread = params.c2 - params.c1;
  return (spread - prior * (params.l2 - params.l1)) / ((1.0 - prior) * spread);
}

PriceList canonical_equal_margin_prices(const ModelParams& params) {
  return PriceList(params.l1, params.l1 - params.c1 + params.c2, params);
}

OptimalPrices optimal_prices(const Scenario& s) {
  const ModelParams& par = s.params;
  const double q0 = s.prior;
  const double chi = s.credibility;

  bool family = q0 <= par.surplus_cutoff() + kProbTol &&
                chi <= benefit_threshold(q0, par) + kProbTol;
  if (family) {
    OptimalPrices out{false, canonical_equal_margin_prices(par),
                      par.l1 - par.c1 + par.c2, par.l2, par.l1 - par.c1};
    return out;
  }
  // Unique optimum: p1 = l1 and p2 chosen so the credibility threshold
  // binds exactly at chi.
  double p2 = par.l1 + q0 * (par.l2 - par.l1) / (1.0 - chi * (1.0 - q0));
  p2 = std::min(p2, par.l2);
  PriceList prices(par.l1, p2, par);
  return OptimalPrices{true, prices, p2, p2, equilibrium_value(s)};
}

double equilibrium_value(const Scenario& s) {
  const ModelParams& par = s.params;
  const double q0 = s.prior;
  const double chi = s.credibility;
  if (chi <= 0.0) return benchmark_value(q0, Benchmark::kNoCredibility, par);
  if (chi >= 1.0) return benchmark_value(q0, Benchmark::kFullCredibility, par);

  if (q0 <= par.surplus_cutoff() && chi <= std::max(benefit_threshold(q0, par), 0.0)) {
    return par.l1 - par.c1;
  }
  double spread = par.c2 - par.c1;
  return ((par.l2 - par.l1) - chi * spread) * q0 + (par.l1 - par.c1) -
         (1.0 - chi) * spread;
}

double benchmark_value(double prior, Benchmark which, const ModelParams& params) {
  if (which == Benchmark::kFullCredibility) {
    return prior * (params.l2 - params.c2) + (1.0 - prior) * (params.l1 - params.c1);
  }
  if (prior <= params.surplus_cutoff()) return params.l1 - params.c1;
  return prior * (params.l2 - params.l1) + (params.l1 - params.c2);
}

Kernel::Kernel(std::vector<double> minor_row, std::vector<double> serious_row)
    : rows_{std::move(minor_row), std::move(serious_row)} {
  if (rows_[0].size() != rows_[1].size()) {
    throw AlphabetMismatch("kernel rows disagree on the message alphabet");
  }
  if (rows_[0].size() < 2) {
    throw std::invalid_argument("message alphabet needs at least two messages");
  }
  for (const auto& row : rows_) {
    double sum = 0.0;
    for (double x : row) {
      if (x < -1e-12 || !std::isfinite(x)) {
        throw std::invalid_argument("kernel probabilities must be nonnegative");
      }
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("kernel rows must sum to 1");
    }
  }
}

Kernel Kernel::fully_revealing() { return Kernel({1.0, 0.0}, {0.0, 1.0}); }

Kernel Kernel::point_mass(int message, int num_messages) {
  std::vector<double> row(num_messages, 0.0);
  row.at(message) = 1.0;
  return Kernel(row, row);
}

PersuasionProfile optimal_experiment(const Scenario& s, const PriceList& p) {
  PEqValue pe = p_eq_value(s, p);
  if (pe.mode != PayoffMode::kPersuasion) {
    throw ModeError(std::string("optimal experiment is pinned down only in persuasion mode, not ") +
                    payoff_mode_name(pe.mode));
  }
  const ModelParams& par = s.params;

  if (classify_region(p, par) == PriceRegion::kSeriousPremium) {
    double threshold = credibility_threshold(s.prior, p, par);
    // In persuasion mode chi >= threshold > 0; at equality the experiment
    // is exactly fully revealing (clamp guards the tolerance band).
    double low = std::min(threshold / s.credibility, 1.0);
    Experiment xi({low, 1.0 - low}, {0.0, 1.0});
    SignallingStrategy sigma = Kernel::point_mass(1, 2);
    return {std::move(xi), std::move(sigma), {Action::kMinor, Action::kSerious}};
  }

  // Minor premium: the favorable message is the low one, and the
  // experiment garbles on the serious type instead.
  double qtilde = minor_cutoff(p, par);
  double threshold = (s.prior - qtilde) / (s.prior * (1.0 - qtilde));
  double high = std::min(threshold / s.credibility, 1.0);
  Experiment xi({1.0, 0.0}, {1.0 - high, high});
  SignallingStrategy sigma = Kernel::point_mass(0, 2);
  return {std::move(xi), std::move(sigma), {Action::kMinor, Action::kSerious}};
}

double OutcomeDistribution::mean_posterior() const {
  double m = 0.0;
  for (const OutcomeAtom& a : atoms) m += a.posterior * a.weight;
  return m;
}

double OutcomeDistribution::expert_value() const {
  double v = 0.0;
  for (const OutcomeAtom& a : atoms) v += a.expert_payoff * a.weight;
  return v;
}

OutcomeDistribution outcome_distribution(const Scenario& s, const PriceList& p) {
  const ModelParams& par = s.params;
  const double q0 = s.prior;
  const double minor = par.minor_margin_at(p.p1());
  const double serious = par.serious_margin_at(p.p2());
  PEqValue pe = p_eq_value(s, p);
  OutcomeDistribution out;
  out.mode = pe.mode;

  switch (classify_region(p, par)) {
    case PriceRegion::kEqualMargin:
      // Canonical equilibrium at equal margins: full disclosure.
      out.atoms = {{0.0, serious, 1.0 - q0}, {1.0, serious, q0}};
      return out;

    case PriceRegion::kSeriousPremium: {
      double qbar = serious_cutoff(p, par);
      if (q0 >= qbar - kProbTol) {
        out.atoms = {{q0, serious, 1.0}};
        return out;
      }
      double w_high = q0 / qbar;
      if (pe.mode == PayoffMode::kPersuasion) {
        out.atoms = {{0.0, minor, 1.0 - w_high}, {qbar, serious, w_high}};
      } else {
        // Canonical cheap-talk split: same posteriors, equal payoffs
        // (the client mixes at the cutoff to keep the expert at p1-c1).
        out.atoms = {{0.0, pe.value, 1.0 - w_high}, {qbar, pe.value, w_high}};
      }
      return out;
    }

    case PriceRegion::kMinorPremium: {
      double qtilde = minor_cutoff(p, par);
      if (q0 <= qtilde + kProbTol) {
        out.atoms = {{q0, minor, 1.0}};
        return out;
      }
      if (pe.mode == PayoffMode::kPersuasion) {
        double w_low = (1.0 - q0) / (1.0 - qtilde);
        out.atoms = {{qtilde, minor, w_low}, {1.0, serious, 1.0 - w_low}};
        return out;
      }
      double entry = serious_entry_minor_premium(p, par);
      if (q0 >= entry - kProbTol) {
        out.atoms = {{q0, serious, 1.0}};
        return out;
      }
      double w_low = (entry - q0) / (entry - qtilde);
      out.atoms = {{qtilde, serious, w_low}, {entry, serious, 1.0 - w_low}};
      return out;
    }
  }
  return out;
}

double public_credibility_value(const Scenario& s, const PriceList& p) {
  EnvelopePair env = value_envelopes(p, s.params);
  return (1.0 - s.credibility) * env.qcav(s.prior) + s.credibility * env.cav(s.prior);
}

PublicCredibilityOptimum public_credibility_optimum(const Scenario& s) {
  const ModelParams& par = s.params;
  const double q0 = s.prior;
  const double chi = s.credibility;
  double spread = par.c2 - par.c1;
  double kink = spread / ((1.0 - chi) * (par.l2 - par.l1) + chi * spread);
  double monopoly = q0 * par.l2 + (1.0 - q0) * par.l1;

  PublicCredibilityOptimum out;
  if (q0 >= kink - kProbTol) out.value = monopoly - par.c2;
  else out.value = chi * q0 * (par.l2 - par.c2) + (1.0 - chi * q0) * (par.l1 - par.c1);

  if (q0 <= kink + kProbTol) out.prices.emplace_back(par.l1, par.l2, par);
  if (q0 >= kink - kProbTol) out.prices.emplace_back(par.l1, monopoly, par);
  return out;
}

bool equal_margin_dominates(const Scenario& s, const PriceList& p) {
  if (classify_region(p, s.params) != PriceRegion::kMinorPremium) {
    throw RegionError("dominance check applies to minor-premium price lists");
  }
  double lhs = p_eq_value(s, p).value;
  double rhs = p_eq_value(s, canonical_equal_margin_prices(s.params)).value;
  return lhs < rhs + kMoneyTol;
}

}  // namespace credence
