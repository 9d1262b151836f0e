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

// Independent verification machinery, deliberately separate from the
// closed forms it certifies: a grid solver for the constrained
// belief-splitting program behind the fixed-price subgame value, an
// equilibrium verifier over finite message alphabets, a seeded Monte Carlo
// playout of the literal game form, and a brute-force price search.
//
// The grid kernels come in OpenMP and serial flavors; the serial loops are
// the reference the parallel ones are tested against. Results are
// identical bit for bit regardless of scheduling: ties in the argmax
// reductions resolve to the lowest grid index.

#ifndef CREDENCE_ORACLE_HPP_
#define CREDENCE_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "credence/equilibrium.hpp"
#include "credence/model.hpp"

namespace credence {

// A maximizer of the belief-splitting program: split the prior into a mean
// posterior gamma on days the expert earns his top payoff and beta on the
// rest (probability k), subject to Bayes plausibility
//   (1-k) gamma + k beta = q0
// and the credibility caps
//   k beta <= chi q0,   k (1-beta) <= chi (1-q0).
struct ProgramSolution {
  double value = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double k = 0.0;
};

// Exhaustive search over (beta, gamma) on a uniform grid_n-point grid per
// axis with the analytic candidates {0, qbar, persuasion floor, q0, 1}
// injected, k solved exactly from Bayes plausibility. Equal-margin or
// serious-premium price lists only (the program is derived there);
// grid_n >= 101.
ProgramSolution solve_program(const Scenario& s, const PriceList& p, int grid_n);
ProgramSolution solve_program_serial(const Scenario& s, const PriceList& p, int grid_n);

// Verdict of the fixed-price equilibrium checks, with per-condition slack:
// Bayes consistency of the posteriors, client optimality at every on-path
// message, and optimality of the signalling strategy for the non-credible
// expert. All three flags true certifies an equilibrium within tol.
struct EquilibriumCertificate {
  bool bayes_ok = false;
  double bayes_deviation = 0.0;
  bool client_opt_ok = false;
  double client_max_regret = 0.0;
  bool expert_opt_ok = false;
  double expert_max_regret = 0.0;
  double value = 0.0;  // expert's ex ante payoff under the profile
  std::vector<int> off_path_messages;

  bool ok() const { return bayes_ok && client_opt_ok && expert_opt_ok; }
};

// client_strategy maps each message index to the client's action. Off-path
// messages are priced at the expert's worst case: the belief (and
// tie-break among client optima) least favorable to him, which makes the
// certificate sufficient but not necessary. Throws AlphabetMismatch when
// the kernels and strategy disagree on the alphabet.
EquilibriumCertificate verify_equilibrium(const Scenario& s, const PriceList& p,
                                          const Experiment& xi,
                                          const SignallingStrategy& sigma,
                                          const std::vector<Action>& client_strategy,
                                          double tol);

struct SimAtom {
  double posterior = 0.0;
  double expert_payoff = 0.0;
  double frequency = 0.0;
};

struct SimReport {
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::vector<SimAtom> atoms;  // ordered by (posterior, payoff)
  double mean_expert_payoff = 0.0;
  double mean_client_payoff = 0.0;
  double std_err = 0.0;  // standard error of the expert payoff mean
};

// Plays the game form n times: nature draws the type, the experiment draws
// a message, the expert is credible with probability chi and otherwise
// substitutes a message from sigma, the client acts per client_strategy.
// Single sequence per seed, deterministic byte for byte; replicate with
// distinct seeds for parallel work.
SimReport simulate(const Scenario& s, const PriceList& p, const Experiment& xi,
                   const SignallingStrategy& sigma,
                   const std::vector<Action>& client_strategy, std::int64_t n,
                   std::uint64_t seed);

struct PriceSearchResult {
  PriceList prices;
  double value = 0.0;
};

// Maximizes the fixed-price subgame value over a grid_n x grid_n grid on
// the admissible price set, with the analytic optimum candidates injected
// ahead of the grid; grid_n >= 51.
PriceSearchResult price_search(const Scenario& s, int grid_n);
PriceSearchResult price_search_serial(const Scenario& s, int grid_n);

}  // namespace credence

#endif  // CREDENCE_ORACLE_HPP_
