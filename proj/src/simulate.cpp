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

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "credence/oracle.hpp"
#include "credence/rng.hpp"

namespace credence {

namespace {

// Client's ex post payoff from the payoff table: pay the posted price and,
// if the problem stays untreated, bear the loss.
double client_ex_post(ProblemType t, Action a, const PriceList& p,
                      const ModelParams& par) {
  switch (a) {
    case Action::kNone:
      return t == ProblemType::kSerious ? -par.l2 : -par.l1;
    case Action::kMinor:
      return -p.p1() - (t == ProblemType::kSerious ? par.l2 : 0.0);
    case Action::kSerious:
      return -p.p2();
  }
  return 0.0;
}

int draw_message(const std::vector<double>& row, double u) {
  double cum = 0.0;
  for (size_t i = 0; i < row.size(); ++i) {
    cum += row[i];
    if (u < cum) return static_cast<int>(i);
  }
  return static_cast<int>(row.size()) - 1;
}

}  // namespace

SimReport simulate(const Scenario& s, const PriceList& p, const Experiment& xi,
                   const SignallingStrategy& sigma,
                   const std::vector<Action>& client_strategy, std::int64_t n,
                   std::uint64_t seed) {
  const int m = xi.num_messages();
  if (sigma.num_messages() != m || static_cast<int>(client_strategy.size()) != m) {
    throw AlphabetMismatch("experiment, signalling strategy and client strategy must share one alphabet");
  }
  if (n < 1) throw std::invalid_argument("simulate needs n >= 1");
  const ModelParams& par = s.params;
  const double q0 = s.prior;
  const double chi = s.credibility;

  // Bayes posterior carried by each message under the profile; messages
  // that never occur keep probability zero and no posterior.
  std::vector<double> posterior(m, 0.0);
  for (int msg = 0; msg < m; ++msg) {
    double from_minor = chi * xi.prob(ProblemType::kMinor, msg) +
                        (1.0 - chi) * sigma.prob(ProblemType::kMinor, msg);
    double from_serious = chi * xi.prob(ProblemType::kSerious, msg) +
                          (1.0 - chi) * sigma.prob(ProblemType::kSerious, msg);
    double marginal = (1.0 - q0) * from_minor + q0 * from_serious;
    if (marginal > 0.0) posterior[msg] = q0 * from_serious / marginal;
  }

  SplitMix64 rng(seed);
  std::vector<std::int64_t> message_count(m, 0);
  double expert_sum = 0.0, expert_sumsq = 0.0, client_sum = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    ProblemType t = rng.next_unit() < q0 ? ProblemType::kSerious : ProblemType::kMinor;
    int msg = draw_message(xi.row(t), rng.next_unit());
    bool credible = rng.next_unit() < chi;
    if (!credible) msg = draw_message(sigma.row(t), rng.next_unit());
    Action a = client_strategy[msg];
    double e = expert_margin(a, p, par);
    expert_sum += e;
    expert_sumsq += e * e;
    client_sum += client_ex_post(t, a, p, par);
    ++message_count[msg];
  }

  SimReport report;
  report.n = n;
  report.seed = seed;
  report.mean_expert_payoff = expert_sum / static_cast<double>(n);
  report.mean_client_payoff = client_sum / static_cast<double>(n);
  if (n > 1) {
    double var = (expert_sumsq - expert_sum * expert_sum / static_cast<double>(n)) /
                 static_cast<double>(n - 1);
    report.std_err = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
  }

  // Merge messages sharing an outcome (posterior, payoff) into one atom.
  std::map<std::pair<double, double>, double> atoms;
  for (int msg = 0; msg < m; ++msg) {
    if (message_count[msg] == 0) continue;
    double e = expert_margin(client_strategy[msg], p, par);
    atoms[{posterior[msg], e}] +=
        static_cast<double>(message_count[msg]) / static_cast<double>(n);
  }
  for (const auto& [key, freq] : atoms) {
    report.atoms.push_back(SimAtom{key.first, key.second, freq});
  }
  return report;
}

}  // namespace credence
