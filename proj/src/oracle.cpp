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

#include "credence/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace credence {

namespace {

constexpr double kFeasTol = 1e-12;

std::vector<double> axis_with_candidates(int grid_n, std::initializer_list<double> extras) {
  std::vector<double> axis;
  axis.reserve(static_cast<size_t>(grid_n) + extras.size());
  for (int i = 0; i < grid_n; ++i) {
    axis.push_back(static_cast<double>(i) / (grid_n - 1));
  }
  for (double e : extras) {
    if (e >= 0.0 && e <= 1.0 && std::isfinite(e)) axis.push_back(e);
  }
  std::sort(axis.begin(), axis.end());
  axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  return axis;
}

// Argmax cell with deterministic tie-breaking toward the lowest index, so
// serial and parallel scans agree bit for bit.
struct BestCell {
  double value = -std::numeric_limits<double>::infinity();
  long long idx = std::numeric_limits<long long>::max();

  void offer(double v, long long i) {
    if (v > value || (v == value && i < idx)) {
      value = v;
      idx = i;
    }
  }
  void merge(const BestCell& other) { offer(other.value, other.idx); }
};

// Precomputed pieces of the belief-splitting objective for one subgame.
struct ProgramContext {
  double q0, chi, qbar, lambda, minor, serious;

  double qcav_at(double gamma) const {
    return gamma >= qbar - kFeasTol ? serious : minor;
  }
  // cav of the value capped at qcav(gamma): the cap bites below the
  // serious cutoff, flattening the high piece away.
  double capped_cav_at(double gamma, double beta) const {
    if (gamma >= qbar - kFeasTol) return std::min(lambda * beta + minor, serious);
    return minor;
  }

  // Objective at a feasible (beta, gamma, k).
  double objective(double beta, double gamma, double k) const {
    return (1.0 - k) * qcav_at(gamma) + k * capped_cav_at(gamma, beta);
  }

  // Evaluates one (gamma, beta) cell, solving k from Bayes plausibility.
  // Returns the best attainable objective or -inf when infeasible, filling
  // k_out with the maximizing k.
  double evaluate(double gamma, double beta, double* k_out) const {
    if (std::abs(gamma - beta) <= 1e-15) {
      if (std::abs(gamma - q0) > kFeasTol) return -std::numeric_limits<double>::infinity();
      // Any k up to chi is feasible; the objective is linear in k.
      double at_zero = objective(beta, gamma, 0.0);
      double at_chi = objective(beta, gamma, chi);
      *k_out = at_chi > at_zero ? chi : 0.0;
      return std::max(at_zero, at_chi);
    }
    double k = (gamma - q0) / (gamma - beta);
    if (k < -kFeasTol || k > 1.0 + kFeasTol) {
      return -std::numeric_limits<double>::infinity();
    }
    k = std::clamp(k, 0.0, 1.0);
    if (k * beta > chi * q0 + kFeasTol ||
        k * (1.0 - beta) > chi * (1.0 - q0) + kFeasTol) {
      return -std::numeric_limits<double>::infinity();
    }
    *k_out = k;
    return objective(beta, gamma, k);
  }
};

ProgramContext make_context(const Scenario& s, const PriceList& p) {
  if (classify_region(p, s.params) == PriceRegion::kMinorPremium) {
    throw RegionError("the belief-splitting program is defined off the minor-premium region");
  }
  ProgramContext ctx;
  ctx.q0 = s.prior;
  ctx.chi = s.credibility;
  ctx.qbar = serious_cutoff(p, s.params);
  ctx.lambda = cav_slope(p, s.params);
  ctx.minor = s.params.minor_margin_at(p.p1());
  ctx.serious = s.params.serious_margin_at(p.p2());
  return ctx;
}

ProgramSolution finish_program(const ProgramContext& ctx,
                               const std::vector<double>& gammas,
                               const std::vector<double>& betas,
                               const BestCell& best) {
  if (!std::isfinite(best.value)) {
    throw InfeasibleError("no feasible belief split found");
  }
  long long nb = static_cast<long long>(betas.size());
  double gamma = gammas[static_cast<size_t>(best.idx / nb)];
  double beta = betas[static_cast<size_t>(best.idx % nb)];
  double k = 0.0;
  double value = ctx.evaluate(gamma, beta, &k);
  return ProgramSolution{value, beta, gamma, k};
}

std::pair<std::vector<double>, std::vector<double>> program_axes(
    const Scenario& s, const PriceList& p, int grid_n, const ProgramContext& ctx) {
  if (grid_n < 101) throw std::invalid_argument("solve_program needs grid_n >= 101");
  double floor = persuasion_floor(s.credibility, p, s.params);
  auto axis = axis_with_candidates(grid_n, {0.0, ctx.qbar, floor, ctx.q0, 1.0});
  return {axis, axis};
}

}  // namespace

ProgramSolution solve_program_serial(const Scenario& s, const PriceList& p, int grid_n) {
  ProgramContext ctx = make_context(s, p);
  auto [gammas, betas] = program_axes(s, p, grid_n, ctx);
  const long long nb = static_cast<long long>(betas.size());
  BestCell best;
  for (size_t ig = 0; ig < gammas.size(); ++ig) {
    for (size_t ib = 0; ib < betas.size(); ++ib) {
      double k = 0.0;
      double v = ctx.evaluate(gammas[ig], betas[ib], &k);
      if (std::isfinite(v)) best.offer(v, static_cast<long long>(ig) * nb + ib);
    }
  }
  return finish_program(ctx, gammas, betas, best);
}

ProgramSolution solve_program(const Scenario& s, const PriceList& p, int grid_n) {
  ProgramContext ctx = make_context(s, p);
  auto [gammas, betas] = program_axes(s, p, grid_n, ctx);
  const long long ng = static_cast<long long>(gammas.size());
  const long long nb = static_cast<long long>(betas.size());
  BestCell best;
#pragma omp parallel
  {
    BestCell local;
#pragma omp for nowait
    for (long long ig = 0; ig < ng; ++ig) {
      for (long long ib = 0; ib < nb; ++ib) {
        double k = 0.0;
        double v = ctx.evaluate(gammas[static_cast<size_t>(ig)],
                                betas[static_cast<size_t>(ib)], &k);
        if (std::isfinite(v)) local.offer(v, ig * nb + ib);
      }
    }
#pragma omp critical(credence_solve_program_merge)
    best.merge(local);
  }
  return finish_program(ctx, gammas, betas, best);
}

namespace {

// Client's ex post payoff used by the worst-case (skeptical) belief scan.
double min_margin_over_best_responses(double q, const PriceList& p,
                                      const ModelParams& params) {
  BestResponseSet set = best_responses(q, p, params);
  double worst = std::numeric_limits<double>::infinity();
  for (Action a : kAllActions) {
    if (set.contains(a)) worst = std::min(worst, expert_margin(a, p, params));
  }
  return worst;
}

// The expert's payoff from an off-path deviation under the skeptical
// convention: the client holds whichever belief is worst for the expert
// and breaks indifference against him. Best responses are piecewise
// constant between pairwise-indifference beliefs, so scanning those
// beliefs and the midpoints between them is exhaustive.
double skeptical_payoff(const PriceList& p, const ModelParams& params) {
  std::vector<double> qs = {0.0, 1.0};
  double candidates[3] = {
      (params.l1 - p.p1()) / params.l1,                    // none ~ minor
      (p.p2() - params.l1) / (params.l2 - params.l1),      // none ~ serious
      (p.p2() - p.p1()) / params.l2,                       // minor ~ serious
  };
  for (double q : candidates) {
    if (q > 0.0 && q < 1.0) qs.push_back(q);
  }
  std::sort(qs.begin(), qs.end());
  size_t base = qs.size();
  for (size_t i = 0; i + 1 < base; ++i) qs.push_back(0.5 * (qs[i] + qs[i + 1]));

  double worst = std::numeric_limits<double>::infinity();
  for (double q : qs) worst = std::min(worst, min_margin_over_best_responses(q, p, params));
  return worst;
}

}  // namespace

EquilibriumCertificate verify_equilibrium(const Scenario& s, const PriceList& p,
                                          const Experiment& xi,
                                          const SignallingStrategy& sigma,
                                          const std::vector<Action>& client_strategy,
                                          double tol) {
  const int m = xi.num_messages();
  if (sigma.num_messages() != m || static_cast<int>(client_strategy.size()) != m) {
    throw AlphabetMismatch("experiment, signalling strategy and client strategy must share one alphabet");
  }
  const ModelParams& par = s.params;
  const double q0 = s.prior;
  const double chi = s.credibility;

  std::vector<double> marginal(m, 0.0), posterior(m, 0.0);
  std::vector<bool> on_path(m, false);
  for (int msg = 0; msg < m; ++msg) {
    double from_minor = chi * xi.prob(ProblemType::kMinor, msg) +
                        (1.0 - chi) * sigma.prob(ProblemType::kMinor, msg);
    double from_serious = chi * xi.prob(ProblemType::kSerious, msg) +
                          (1.0 - chi) * sigma.prob(ProblemType::kSerious, msg);
    marginal[msg] = (1.0 - q0) * from_minor + q0 * from_serious;
    on_path[msg] = marginal[msg] > 0.0;
    if (on_path[msg]) posterior[msg] = q0 * from_serious / marginal[msg];
  }

  EquilibriumCertificate cert;

  // Bayes consistency: the message distribution is a distribution and the
  // posteriors average back to the prior.
  double total = 0.0, mean_posterior = 0.0;
  for (int msg = 0; msg < m; ++msg) {
    total += marginal[msg];
    mean_posterior += marginal[msg] * posterior[msg];
  }
  cert.bayes_deviation = std::max(std::abs(total - 1.0), std::abs(mean_posterior - q0));
  cert.bayes_ok = cert.bayes_deviation <= tol;

  // Client optimality at every on-path message.
  cert.client_max_regret = 0.0;
  for (int msg = 0; msg < m; ++msg) {
    if (!on_path[msg]) {
      cert.off_path_messages.push_back(msg);
      continue;
    }
    double chosen = client_expected_utility(posterior[msg], client_strategy[msg], p, par);
    double best = chosen;
    for (Action a : kAllActions) {
      best = std::max(best, client_expected_utility(posterior[msg], a, p, par));
    }
    cert.client_max_regret = std::max(cert.client_max_regret, best - chosen);
  }
  cert.client_opt_ok = cert.client_max_regret <= tol;

  // Signalling optimality for the non-credible expert: every message he
  // uses must earn the best available payoff, where off-path deviations
  // are priced skeptically.
  double off_path_value = skeptical_payoff(p, par);
  double deviation_ceiling = -std::numeric_limits<double>::infinity();
  for (int msg = 0; msg < m; ++msg) {
    double e = on_path[msg] ? expert_margin(client_strategy[msg], p, par) : off_path_value;
    deviation_ceiling = std::max(deviation_ceiling, e);
  }
  cert.expert_max_regret = 0.0;
  for (ProblemType t : {ProblemType::kMinor, ProblemType::kSerious}) {
    for (int msg = 0; msg < m; ++msg) {
      if (sigma.prob(t, msg) <= 0.0) continue;
      double e = on_path[msg] ? expert_margin(client_strategy[msg], p, par) : off_path_value;
      cert.expert_max_regret = std::max(cert.expert_max_regret, deviation_ceiling - e);
    }
  }
  cert.expert_opt_ok = cert.expert_max_regret <= tol;

  // Ex ante expert payoff under the profile.
  double value = 0.0;
  for (int msg = 0; msg < m; ++msg) {
    if (!on_path[msg]) continue;
    value += marginal[msg] * expert_margin(client_strategy[msg], p, par);
  }
  cert.value = value;
  return cert;
}

namespace {

struct PriceCandidates {
  std::vector<double> p1_axis, p2_axis;   // grid axes
  std::vector<PriceList> injected;        // analytic candidates, tried first
};

PriceCandidates price_grid(const Scenario& s, int grid_n) {
  if (grid_n < 51) throw std::invalid_argument("price_search needs grid_n >= 51");
  const ModelParams& par = s.params;
  PriceCandidates g;
  g.p1_axis.reserve(grid_n);
  g.p2_axis.reserve(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    double t = static_cast<double>(i) / (grid_n - 1);
    g.p1_axis.push_back(par.c1 + t * (par.l1 - par.c1));
    g.p2_axis.push_back(par.c2 + t * (par.l2 - par.c2));
  }
  g.injected.push_back(canonical_equal_margin_prices(par));
  if (s.credibility > std::max(benefit_threshold(s.prior, par), 0.0)) {
    double p2 = par.l1 + s.prior * (par.l2 - par.l1) / (1.0 - s.credibility * (1.0 - s.prior));
    g.injected.emplace_back(par.l1, std::min(p2, par.l2), par);
  }
  return g;
}

PriceSearchResult finish_price_search(const Scenario& s, const PriceCandidates& g,
                                      const BestCell& best) {
  long long n_injected = static_cast<long long>(g.injected.size());
  long long n2 = static_cast<long long>(g.p2_axis.size());
  if (best.idx < n_injected) {
    return PriceSearchResult{g.injected[static_cast<size_t>(best.idx)], best.value};
  }
  long long flat = best.idx - n_injected;
  PriceList prices(g.p1_axis[static_cast<size_t>(flat / n2)],
                   g.p2_axis[static_cast<size_t>(flat % n2)], s.params);
  return PriceSearchResult{prices, best.value};
}

}  // namespace

PriceSearchResult price_search_serial(const Scenario& s, int grid_n) {
  PriceCandidates g = price_grid(s, grid_n);
  BestCell best;
  long long idx = 0;
  for (const PriceList& p : g.injected) {
    best.offer(p_eq_value(s, p).value, idx++);
  }
  const long long n2 = static_cast<long long>(g.p2_axis.size());
  for (size_t i = 0; i < g.p1_axis.size(); ++i) {
    for (size_t j = 0; j < g.p2_axis.size(); ++j) {
      if (g.p2_axis[j] < g.p1_axis[i]) continue;  // outside P
      PriceList p(g.p1_axis[i], g.p2_axis[j], s.params);
      best.offer(p_eq_value(s, p).value,
                 idx + static_cast<long long>(i) * n2 + static_cast<long long>(j));
    }
  }
  return finish_price_search(s, g, best);
}

PriceSearchResult price_search(const Scenario& s, int grid_n) {
  PriceCandidates g = price_grid(s, grid_n);
  BestCell best;
  long long idx = 0;
  for (const PriceList& p : g.injected) {
    best.offer(p_eq_value(s, p).value, idx++);
  }
  const long long n1 = static_cast<long long>(g.p1_axis.size());
  const long long n2 = static_cast<long long>(g.p2_axis.size());
#pragma omp parallel
  {
    BestCell local;
#pragma omp for nowait
    for (long long i = 0; i < n1; ++i) {
      for (long long j = 0; j < n2; ++j) {
        if (g.p2_axis[static_cast<size_t>(j)] < g.p1_axis[static_cast<size_t>(i)]) continue;
        PriceList p(g.p1_axis[static_cast<size_t>(i)], g.p2_axis[static_cast<size_t>(j)], s.params);
        local.offer(p_eq_value(s, p).value, idx + i * n2 + j);
      }
    }
#pragma omp critical(credence_price_search_merge)
    best.merge(local);
  }
  return finish_price_search(s, g, best);
}

}  // namespace credence
