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

#include <cmath>

#include "credence/oracle.hpp"
#include "credence/welfare.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace credence;
using brute::near;

namespace {

ModelParams reference_params() { return validate_params(1.0, 3.0, 4.0, 10.0); }

Scenario scen(double q0, double chi) {
  return make_scenario(reference_params(), q0, chi);
}

}  // namespace

TEST_CASE("program solver at the worked scenarios") {
  ModelParams par = reference_params();
  PriceList p(4, 7, par);

  ProgramSolution sol = solve_program(scen(0.25, 0.8), p, 201);
  CHECK(near(sol.value, 3.5, 1e-9));
  CHECK(near(sol.gamma, 0.5, 1e-9));
  CHECK(near(sol.beta, 0.0, 1e-9));
  CHECK(near(sol.k, 0.5, 1e-9));

  ProgramSolution capped = solve_program(scen(0.25, 0.5), p, 201);
  CHECK(near(capped.value, 3.0, 1e-9));

  ProgramSolution flat = solve_program(scen(0.7, 0.3), PriceList(4, 6, par), 201);
  CHECK(near(flat.value, 3.0, 1e-9));

  CHECK_THROWS_AS(solve_program(scen(0.5, 0.5), PriceList(3, 4, par), 201), RegionError);
  CHECK_THROWS_AS(solve_program(scen(0.5, 0.5), p, 50), std::invalid_argument);
}

TEST_CASE("program solver agrees with the closed form on random scenarios") {
  brute::Rng rng(20260401);
  for (int i = 0; i < 60; ++i) {
    ModelParams par = brute::random_params(rng);
    PriceList p = (i % 4 == 0) ? brute::random_equal_margin(rng, par)
                               : brute::random_serious_premium(rng, par);
    Scenario s{par, rng.uniform(0.02, 0.98), rng.uniform(0.02, 0.98)};
    ProgramSolution sol = solve_program(s, p, 201);
    double closed = p_eq_value(s, p).value;
    double bound = 2.0 / 201.0 * (par.l2 - par.c1);
    CHECK(std::fabs(sol.value - closed) <= bound);
    // With the analytic candidates injected the agreement is in fact exact.
    CHECK(near(sol.value, closed, 1e-9));
  }
}

TEST_CASE("whenever the solver beats cheap talk it parks gamma at the cutoff") {
  brute::Rng rng(20260402);
  for (int i = 0; i < 40; ++i) {
    ModelParams par = brute::random_params(rng);
    PriceList p = brute::random_serious_premium(rng, par);
    Scenario s{par, rng.uniform(0.02, 0.98), rng.uniform(0.02, 0.98)};
    ProgramSolution sol = solve_program(s, p, 201);
    EnvelopePair env = envelopes_serious_premium(p, par);
    if (sol.value > env.qcav(s.prior) + 1e-9) {
      double step = 1.0 / 200.0;
      CHECK(std::fabs(sol.gamma - serious_cutoff(p, par)) <= step + 1e-12);
    }
  }
}

TEST_CASE("parallel and serial program solvers match bit for bit") {
  brute::Rng rng(20260403);
  for (int i = 0; i < 25; ++i) {
    ModelParams par = brute::random_params(rng);
    PriceList p = brute::random_serious_premium(rng, par);
    Scenario s{par, rng.uniform(0.02, 0.98), rng.uniform(0.02, 0.98)};
    ProgramSolution a = solve_program(s, p, 151);
    ProgramSolution b = solve_program_serial(s, p, 151);
    CHECK(a.value == b.value);
    CHECK(a.beta == b.beta);
    CHECK(a.gamma == b.gamma);
    CHECK(a.k == b.k);
  }
}

TEST_CASE("verifier certifies the persuasion profile") {
  ModelParams par = reference_params();
  PriceList p(4, 7, par);
  Scenario s = scen(0.25, 0.8);
  PersuasionProfile plan = optimal_experiment(s, p);
  EquilibriumCertificate cert =
      verify_equilibrium(s, p, plan.experiment, plan.signalling, plan.client_actions, 1e-9);
  CHECK(cert.ok());
  CHECK(near(cert.value, 3.5, 1e-12));
  CHECK(cert.client_max_regret <= 1e-12);
  CHECK(cert.expert_max_regret <= 1e-12);
}

TEST_CASE("verifier flags a client deviation") {
  ModelParams par = reference_params();
  PriceList p(4, 7, par);
  Scenario s = scen(0.25, 0.8);
  PersuasionProfile plan = optimal_experiment(s, p);
  EquilibriumCertificate cert =
      verify_equilibrium(s, p, plan.experiment, plan.signalling,
                         {Action::kSerious, Action::kSerious}, 1e-9);
  CHECK_FALSE(cert.client_opt_ok);
  // At the revealed-minor message the serious purchase overpays by p2 - p1.
  CHECK(near(cert.client_max_regret, 3.0, 1e-12));
}

TEST_CASE("verifier certifies the equal-margin fully-disclosing equilibrium") {
  ModelParams par = reference_params();
  PriceList em(4, 6, par);
  Scenario s = scen(0.25, 0.8);
  Experiment fr = Kernel::fully_revealing();
  EquilibriumCertificate cert =
      verify_equilibrium(s, em, fr, fr, {Action::kMinor, Action::kSerious}, 1e-9);
  CHECK(cert.ok());
  CHECK(near(cert.value, 3.0, 1e-12));
}

TEST_CASE("verifier soundness: a worse on-path action flips client optimality") {
  brute::Rng rng(20260404);
  int flipped = 0;
  for (int i = 0; i < 40; ++i) {
    ModelParams par = brute::random_params(rng);
    PriceList p = brute::random_serious_premium(rng, par);
    double qbar = serious_cutoff(p, par);
    double q0 = rng.uniform(0.1, 0.9) * qbar;
    if (q0 <= 1e-6) continue;
    double threshold = credibility_threshold(q0, p, par);
    Scenario s{par, q0, threshold + (1.0 - threshold) * rng.uniform(0.1, 0.9)};
    PersuasionProfile plan = optimal_experiment(s, p);
    EquilibriumCertificate good =
        verify_equilibrium(s, p, plan.experiment, plan.signalling, plan.client_actions, 1e-9);
    REQUIRE(good.ok());

    // Perturb the revealed-minor response to something strictly worse.
    EquilibriumCertificate bad =
        verify_equilibrium(s, p, plan.experiment, plan.signalling,
                           {Action::kSerious, Action::kSerious}, 1e-9);
    CHECK_FALSE(bad.client_opt_ok);
    ++flipped;
  }
  CHECK(flipped > 20);
}

TEST_CASE("verifier rejects mismatched alphabets") {
  ModelParams par = reference_params();
  PriceList p(4, 7, par);
  Experiment three({0.5, 0.25, 0.25}, {0.0, 0.5, 0.5});
  CHECK_THROWS_AS(verify_equilibrium(scen(0.25, 0.8), p, three, Kernel::point_mass(1, 2),
                                     {Action::kMinor, Action::kSerious}, 1e-9),
                  AlphabetMismatch);
}

TEST_CASE("simulation matches the outcome distribution") {
  ModelParams par = reference_params();
  PriceList p(4, 7, par);
  Scenario s = scen(0.25, 0.8);
  PersuasionProfile plan = optimal_experiment(s, p);
  SimReport report = simulate(s, p, plan.experiment, plan.signalling,
                              plan.client_actions, 200000, 42);
  CHECK(report.n == 200000);
  CHECK(std::fabs(report.mean_expert_payoff - 3.5) <= 4.0 * report.std_err);
  REQUIRE(report.atoms.size() == 2);
  CHECK(near(report.atoms[0].posterior, 0.0, 1e-12));
  CHECK(near(report.atoms[1].posterior, 0.5, 1e-9));
  CHECK(near(report.atoms[0].frequency, 0.5, 0.01));
  CHECK(near(report.atoms[1].frequency, 0.5, 0.01));
  double total = report.atoms[0].frequency + report.atoms[1].frequency;
  CHECK(near(total, 1.0, 1e-12));
}

TEST_CASE("a single play lands on one of the three margins") {
  ModelParams par = reference_params();
  PriceList p(4, 7, par);
  Scenario s = scen(0.25, 0.8);
  PersuasionProfile plan = optimal_experiment(s, p);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    SimReport one = simulate(s, p, plan.experiment, plan.signalling,
                             plan.client_actions, 1, seed);
    bool hit = near(one.mean_expert_payoff, 0.0, 1e-12) ||
               near(one.mean_expert_payoff, 3.0, 1e-12) ||
               near(one.mean_expert_payoff, 4.0, 1e-12);
    CHECK(hit);
  }
}

TEST_CASE("simulation is deterministic per seed") {
  ModelParams par = reference_params();
  PriceList p(4, 7, par);
  Scenario s = scen(0.25, 0.8);
  PersuasionProfile plan = optimal_experiment(s, p);
  SimReport a = simulate(s, p, plan.experiment, plan.signalling, plan.client_actions, 50000, 7);
  SimReport b = simulate(s, p, plan.experiment, plan.signalling, plan.client_actions, 50000, 7);
  CHECK(a.mean_expert_payoff == b.mean_expert_payoff);
  CHECK(a.mean_client_payoff == b.mean_client_payoff);
  CHECK(a.std_err == b.std_err);
  REQUIRE(a.atoms.size() == b.atoms.size());
  for (size_t i = 0; i < a.atoms.size(); ++i) {
    CHECK(a.atoms[i].posterior == b.atoms[i].posterior);
    CHECK(a.atoms[i].expert_payoff == b.atoms[i].expert_payoff);
    CHECK(a.atoms[i].frequency == b.atoms[i].frequency);
  }
  SimReport c = simulate(s, p, plan.experiment, plan.signalling, plan.client_actions, 50000, 8);
  CHECK(a.mean_expert_payoff != c.mean_expert_payoff);
}

TEST_CASE("forced-credible full disclosure at equal margins is efficient") {
  ModelParams par = reference_params();
  PriceList em(4, 6, par);
  double q0 = 0.3;
  Scenario s{par, q0, 1.0};  // chi = 1: the credible path always plays
  Experiment fr = Kernel::fully_revealing();
  SimReport report = simulate(s, em, fr, fr, {Action::kMinor, Action::kSerious}, 400000, 11);
  double outside = -(1.0 - q0) * par.l1 - q0 * par.l2;
  double client_value = report.mean_client_payoff - outside;
  double target = total_surplus(q0, par) - (par.l1 - par.c1);
  CHECK(std::fabs(client_value - target) <= 0.02);
}

TEST_CASE("price search finds the closed-form optimum") {
  PriceSearchResult best = price_search(scen(0.25, 0.5), 101);
  CHECK(near(best.prices.p1(), 4.0, 1e-12));
  CHECK(near(best.prices.p2(), 6.4, 1e-12));
  CHECK(near(best.value, 3.25, 1e-12));

  PriceSearchResult flat = price_search(scen(0.25, 0.2), 101);
  CHECK(near(flat.value, 3.0, 1e-12));

  Scenario high = scen(0.9, 0.99);
  PriceSearchResult near_full = price_search(high, 101);
  CHECK(near(near_full.value, equilibrium_value(high), 1e-9));

  CHECK_THROWS_AS(price_search(scen(0.5, 0.5), 11), std::invalid_argument);
}

TEST_CASE("parallel and serial price search match bit for bit") {
  brute::Rng rng(20260405);
  for (int i = 0; i < 10; ++i) {
    ModelParams par = brute::random_params(rng);
    Scenario s{par, rng.uniform(0.02, 0.98), rng.uniform(0.02, 0.98)};
    PriceSearchResult a = price_search(s, 81);
    PriceSearchResult b = price_search_serial(s, 81);
    CHECK(a.value == b.value);
    CHECK(a.prices.p1() == b.prices.p1());
    CHECK(a.prices.p2() == b.prices.p2());
  }
}

TEST_CASE("price search never beats the closed-form equilibrium value") {
  brute::Rng rng(20260406);
  for (int i = 0; i < 20; ++i) {
    ModelParams par = brute::random_params(rng);
    Scenario s{par, rng.uniform(0.02, 0.98), rng.uniform(0.02, 0.98)};
    PriceSearchResult best = price_search(s, 81);
    double ev = equilibrium_value(s);
    CHECK(best.value <= ev + 1e-9);
    CHECK(near(best.value, ev, 1e-9));  // candidates include the optimum
  }
}
