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

// Command-line front end. Exit codes: 0 success, 1 I/O or verification
// failure, 2 configuration error, 3 assumption violation.
//
// Model primitives and the scenario are top-level options shared by every
// subcommand (and settable from a flat key=value config file via
// --config); subcommands add their own knobs. Data commands emit CSV with
// a header row, 17 significant digits and LF endings; thread count for
// the parallel kernels follows OMP_NUM_THREADS.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "credence/csv.hpp"
#include "credence/envelopes.hpp"
#include "credence/equilibrium.hpp"
#include "credence/oracle.hpp"
#include "credence/sweep.hpp"
#include "credence/welfare.hpp"

using namespace credence;

namespace {

struct Options {
  double c1 = 1.0, c2 = 3.0, l1 = 4.0, l2 = 10.0;
  double q0 = 0.5, chi = 0.5;
  double p1 = -1.0, p2 = -1.0;  // negative: not set
  std::string out;
  std::uint64_t seed = 42;

  bool has_prices() const { return p1 >= 0.0 && p2 >= 0.0; }

  ModelParams params() const { return validate_params(c1, c2, l1, l2); }
  Scenario scenario(const ModelParams& par) const { return make_scenario(par, q0, chi); }
  PriceList prices(const ModelParams& par) const {
    if (!has_prices()) throw ConfigError("this command needs --p1 and --p2");
    return PriceList(p1, p2, par);
  }
};

void emit(const Table& table, const std::string& out) {
  if (out.empty()) write_csv(std::cout, table);
  else write_csv(out, table);
}

std::string money(double v) { return format_full(v); }

// The canonical equilibrium profile of the fixed-price subgame, when it is
// playable with a pure client strategy. Cheap-talk instances whose value
// relies on the client mixing at a cutoff belief are reported as
// unsupported rather than approximated.
struct SimProfile {
  Experiment xi;
  SignallingStrategy sigma;
  std::vector<Action> rho;
};

SimProfile canonical_profile(const Scenario& s, const PriceList& p) {
  const ModelParams& par = s.params;
  PriceRegion region = classify_region(p, par);
  if (region == PriceRegion::kEqualMargin) {
    Experiment fr = Kernel::fully_revealing();
    return {fr, fr, {Action::kMinor, Action::kSerious}};
  }
  PEqValue pe = p_eq_value(s, p);
  if (pe.mode == PayoffMode::kPersuasion) {
    PersuasionProfile plan = optimal_experiment(s, p);
    return {plan.experiment, plan.signalling, plan.client_actions};
  }
  // Flat or cheap-talk: disclose nothing and let the client act at the
  // prior, provided her pure best response supports the subgame value.
  Action at_prior = expert_preferred(best_responses(s.prior, p, par), p, par);
  if (expert_margin(at_prior, p, par) != pe.value) {
    throw ModeError("no pure-strategy canonical equilibrium at these prices "
                    "(the cheap-talk value needs the client to mix); "
                    "choose persuasion-mode or equal-margin prices");
  }
  Kernel silent = Kernel::point_mass(1, 2);
  return {silent, silent, {at_prior, at_prior}};
}

int run_value(const Options& opt) {
  ModelParams par = opt.params();
  Scenario s = opt.scenario(par);
  OptimalPrices prices = optimal_prices(s);
  std::printf("ev = %s\n", money(equilibrium_value(s)).c_str());
  std::printf("optimal p = (%s, %s)\n", money(prices.prices.p1()).c_str(),
              money(prices.prices.p2()).c_str());
  if (!prices.unique) {
    std::printf("optimal family: p1 = %s, p2 in [%s, %s]\n", money(par.l1).c_str(),
                money(prices.p2_lo).c_str(), money(prices.p2_hi).c_str());
  }
  if (opt.has_prices()) {
    PriceList p = opt.prices(par);
    PEqValue pe = p_eq_value(s, p);
    std::printf("p-eq value at (%s, %s) = %s [%s]\n", money(p.p1()).c_str(),
                money(p.p2()).c_str(), money(pe.value).c_str(), payoff_mode_name(pe.mode));
  }
  return 0;
}

int run_price(const Options& opt) {
  ModelParams par = opt.params();
  Scenario s = opt.scenario(par);
  OptimalPrices prices = optimal_prices(s);
  std::printf("unique = %s\n", prices.unique ? "true" : "false");
  std::printf("p1 = %s\np2 = %s\n", money(prices.prices.p1()).c_str(),
              money(prices.prices.p2()).c_str());
  std::printf("p2 family = [%s, %s]\n", money(prices.p2_lo).c_str(), money(prices.p2_hi).c_str());
  std::printf("value = %s\n", money(prices.value).c_str());
  std::printf("benefit threshold = %s\n", money(benefit_threshold(s.prior, par)).c_str());
  return 0;
}

int run_welfare(const Options& opt) {
  ModelParams par = opt.params();
  Scenario s = opt.scenario(par);
  std::printf("total surplus = %s\n", money(total_surplus(s.prior, par)).c_str());
  std::printf("ev = %s\n", money(equilibrium_value(s)).c_str());
  std::printf("eu = %s\n", money(client_best_value(s)).c_str());
  ClientValueSet set = client_value_set(s);
  std::printf("client value set = [%s, %s]\n", money(set.lo).c_str(), money(set.hi).c_str());
  if (opt.has_prices()) {
    PriceList p = opt.prices(par);
    std::printf("u at (%s, %s) = %s\n", money(p.p1()).c_str(), money(p.p2()).c_str(),
                money(client_value_at_prices(s.prior, p, par)).c_str());
    if (classify_region(p, par) == PriceRegion::kEqualMargin) {
      DiscontinuityGaps g = discontinuity_gaps(s.prior, p, par);
      std::printf("gap vs minor-premium approach = %s\n", money(g.from_minor_region).c_str());
      std::printf("gap vs serious-premium approach = %s\n", money(g.from_serious_region).c_str());
    }
  }
  return 0;
}

int run_sweep(const Options& opt, double q0_min, double q0_max, int q0_steps,
              double chi_min, double chi_max, int chi_steps) {
  ModelParams par = opt.params();
  if (!(q0_min > 0 && q0_max < 1 && q0_min <= q0_max) ||
      !(chi_min >= 0 && chi_max <= 1 && chi_min <= chi_max)) {
    throw ConfigError("sweep ranges must satisfy 0 < q0 < 1 and 0 <= chi <= 1");
  }
  auto q0s = linspace(q0_min, q0_max, q0_steps);
  auto chis = linspace(chi_min, chi_max, chi_steps);
  auto ev = grid_eval(q0s, chis, [&](double q0, double chi) {
    return equilibrium_value(Scenario{par, q0, chi});
  });
  Table table;
  table.header = {"q0", "chi", "ev", "eu", "p1", "p2", "unique"};
  table.rows.reserve(ev.size());
  for (size_t i = 0; i < q0s.size(); ++i) {
    for (size_t j = 0; j < chis.size(); ++j) {
      Scenario s{par, q0s[i], chis[j]};
      OptimalPrices prices = optimal_prices(s);
      table.rows.push_back({q0s[i], chis[j], ev[i * chis.size() + j], client_best_value(s),
                            prices.prices.p1(), prices.prices.p2(),
                            prices.unique ? 1.0 : 0.0});
    }
  }
  emit(table, opt.out);
  return 0;
}

int run_figure_ev_surface(const Options& opt, int steps) {
  ModelParams par = opt.params();
  auto q0s = linspace(1e-3, 1.0 - 1e-3, steps);
  auto chis = linspace(0.0, 1.0, steps);
  auto ev = equilibrium_value_surface(par, q0s, chis);
  Table table;
  table.header = {"q0", "chi", "ev"};
  table.rows.reserve(ev.size());
  for (size_t i = 0; i < q0s.size(); ++i) {
    for (size_t j = 0; j < chis.size(); ++j) {
      table.rows.push_back({q0s[i], chis[j], ev[i * chis.size() + j]});
    }
  }
  emit(table, opt.out);
  return 0;
}

int run_figure_ev_slice(const Options& opt, int steps) {
  ModelParams par = opt.params();
  auto q0s = linspace(1e-3, 1.0 - 1e-3, steps);
  Table table;
  table.header = {"q0", "ev", "ev_chi0", "ev_chi1"};
  for (double q0 : q0s) {
    table.rows.push_back({q0, equilibrium_value(Scenario{par, q0, opt.chi}),
                          benchmark_value(q0, Benchmark::kNoCredibility, par),
                          benchmark_value(q0, Benchmark::kFullCredibility, par)});
  }
  emit(table, opt.out);
  return 0;
}

int run_figure_p_eq_value(const Options& opt, int steps) {
  ModelParams par = opt.params();
  PriceList p = opt.prices(par);
  auto q0s = linspace(1e-3, 1.0 - 1e-3, steps);
  auto chis = linspace(0.0, 1.0, steps);
  Table table;
  table.header = {"q0", "chi", "value", "mode"};
  for (double q0 : q0s) {
    for (double chi : chis) {
      PEqValue pe = p_eq_value(Scenario{par, q0, chi}, p);
      table.rows.push_back({q0, chi, pe.value, static_cast<double>(pe.mode)});
    }
  }
  emit(table, opt.out);
  return 0;
}

int run_figure_u_star(const Options& opt, int steps) {
  ModelParams par = opt.params();
  Table table;
  table.header = {"p1", "p2", "region", "u"};
  auto p1s = linspace(par.c1, par.l1, steps);
  auto p2s = linspace(par.c2, par.l2, steps);
  for (double p1 : p1s) {
    for (double p2 : p2s) {
      if (p2 < p1) continue;
      PriceList p(p1, p2, par);
      table.rows.push_back({p1, p2, static_cast<double>(classify_region(p, par)),
                            client_value_at_prices(opt.q0, p, par)});
    }
  }
  emit(table, opt.out);
  return 0;
}

int run_figure_public_credibility(const Options& opt, int steps) {
  ModelParams par = opt.params();
  auto q0s = linspace(1e-3, 1.0 - 1e-3, steps);
  Table table;
  table.header = {"q0", "ev", "ev_pc"};
  for (double q0 : q0s) {
    Scenario s{par, q0, opt.chi};
    table.rows.push_back({q0, equilibrium_value(s), public_credibility_optimum(s).value});
  }
  emit(table, opt.out);
  return 0;
}

int run_figure_benchmarks(const Options& opt, int steps) {
  ModelParams par = opt.params();
  auto q0s = linspace(0.0, 1.0, steps);
  EnvelopePair env = profit_envelopes(par);
  Table table;
  table.header = {"q0", "pi", "qcav_pi", "cav_pi"};
  for (double q0 : q0s) {
    table.rows.push_back({q0, discriminatory_profit(q0, par), env.qcav(q0), env.cav(q0)});
  }
  emit(table, opt.out);
  return 0;
}

int run_simulate(const Options& opt, std::int64_t n) {
  ModelParams par = opt.params();
  Scenario s = opt.scenario(par);
  PriceList p = opt.prices(par);
  SimProfile profile = canonical_profile(s, p);
  SimReport report = simulate(s, p, profile.xi, profile.sigma, profile.rho, n, opt.seed);
  std::FILE* summary = opt.out.empty() ? stderr : stdout;
  std::fprintf(summary, "n = %lld, seed = %llu\n", static_cast<long long>(report.n),
               static_cast<unsigned long long>(report.seed));
  std::fprintf(summary, "mean expert payoff = %s (std err %s)\n",
               money(report.mean_expert_payoff).c_str(), money(report.std_err).c_str());
  std::fprintf(summary, "mean client payoff = %s\n", money(report.mean_client_payoff).c_str());
  std::fprintf(summary, "closed-form value = %s\n", money(p_eq_value(s, p).value).c_str());
  Table table;
  table.header = {"posterior", "expert_payoff", "frequency"};
  for (const SimAtom& atom : report.atoms) {
    table.rows.push_back({atom.posterior, atom.expert_payoff, atom.frequency});
  }
  emit(table, opt.out);
  return 0;
}

int run_verify(const Options& opt) {
  ModelParams par = opt.params();
  Scenario s = opt.scenario(par);
  PriceList p = opt.prices(par);
  SimProfile profile = canonical_profile(s, p);
  EquilibriumCertificate cert =
      verify_equilibrium(s, p, profile.xi, profile.sigma, profile.rho, 1e-9);
  std::printf("bayes_ok = %s (deviation %s)\n", cert.bayes_ok ? "true" : "false",
              money(cert.bayes_deviation).c_str());
  std::printf("client_opt_ok = %s (max regret %s)\n", cert.client_opt_ok ? "true" : "false",
              money(cert.client_max_regret).c_str());
  std::printf("expert_opt_ok = %s (max regret %s)\n", cert.expert_opt_ok ? "true" : "false",
              money(cert.expert_max_regret).c_str());
  std::printf("value = %s\n", money(cert.value).c_str());
  std::printf("off-path messages:");
  for (int m : cert.off_path_messages) std::printf(" %d", m);
  std::printf("\n");
  return cert.ok() ? 0 : 1;
}

int run_oracle(const Options& opt, int grid_n) {
  ModelParams par = opt.params();
  Scenario s = opt.scenario(par);
  if (opt.has_prices()) {
    PriceList p = opt.prices(par);
    ProgramSolution sol = solve_program(s, p, grid_n);
    PEqValue pe = p_eq_value(s, p);
    std::printf("oracle value = %s at beta = %s, gamma = %s, k = %s\n",
                money(sol.value).c_str(), money(sol.beta).c_str(), money(sol.gamma).c_str(),
                money(sol.k).c_str());
    std::printf("closed form = %s [%s]\n", money(pe.value).c_str(), payoff_mode_name(pe.mode));
    std::printf("difference = %s\n", money(sol.value - pe.value).c_str());
  } else {
    PriceSearchResult best = price_search(s, grid_n >= 51 ? grid_n : 201);
    std::printf("searched optimum: p = (%s, %s), value = %s\n", money(best.prices.p1()).c_str(),
                money(best.prices.p2()).c_str(), money(best.value).c_str());
    std::printf("closed form ev = %s\n", money(equilibrium_value(s)).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibrium engine for the two-type credence-goods game with limited credibility"};
  app.require_subcommand(1);
  app.set_config("--config");

  Options opt;
  app.add_option("--c1", opt.c1, "cost of the minor treatment");
  app.add_option("--c2", opt.c2, "cost of the serious treatment");
  app.add_option("--l1", opt.l1, "loss from an untreated minor problem");
  app.add_option("--l2", opt.l2, "loss from an untreated serious problem");
  app.add_option("--q0", opt.q0, "prior probability of the serious problem");
  app.add_option("--chi", opt.chi, "expert credibility");
  app.add_option("--p1", opt.p1, "posted price of the minor treatment");
  app.add_option("--p2", opt.p2, "posted price of the serious treatment");
  app.add_option("--seed", opt.seed, "simulation seed");
  app.add_option("--out", opt.out, "output CSV path (default: stdout)");

  auto* value = app.add_subcommand("value", "equilibrium value and optimal prices");
  value->fallthrough();
  auto* price = app.add_subcommand("price", "optimal price list details");
  price->fallthrough();
  auto* welfare = app.add_subcommand("welfare", "surplus and client welfare");
  welfare->fallthrough();

  int q0_steps = 101, chi_steps = 101;
  double q0_min = 1e-3, q0_max = 1.0 - 1e-3, chi_min = 0.0, chi_max = 1.0;
  auto* sweep = app.add_subcommand("sweep", "scenario grid to CSV");
  sweep->fallthrough();
  sweep->add_option("--q0-min", q0_min);
  sweep->add_option("--q0-max", q0_max);
  sweep->add_option("--q0-steps", q0_steps);
  sweep->add_option("--chi-min", chi_min);
  sweep->add_option("--chi-max", chi_max);
  sweep->add_option("--chi-steps", chi_steps);

  int fig_steps = 101;
  auto* figure = app.add_subcommand("figure", "figure data series to CSV");
  figure->require_subcommand(1);
  figure->fallthrough();
  auto add_fig = [&](const char* name, const char* help) {
    auto* sub = figure->add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("--steps", fig_steps, "grid resolution");
    return sub;
  };
  auto* fig_surface = add_fig("ev-surface", "equilibrium value over (q0, chi)");
  auto* fig_slice = add_fig("ev-slice", "equilibrium value in q0 at fixed chi");
  auto* fig_peq = add_fig("p-eq-value", "fixed-price value over (q0, chi); needs --p1/--p2");
  auto* fig_ustar = add_fig("u-star", "client value over the price set at fixed q0");
  auto* fig_pc = add_fig("public-credibility", "public-credibility comparison at fixed chi");
  auto* fig_bench = add_fig("benchmarks", "discriminatory profit and its envelopes");

  std::int64_t sim_n = 100000;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo playout of the game form");
  simulate_cmd->fallthrough();
  simulate_cmd->add_option("--n", sim_n, "number of plays");

  auto* verify_cmd = app.add_subcommand("verify", "certify the canonical equilibrium at fixed prices");
  verify_cmd->fallthrough();

  int grid_n = 401;
  auto* oracle_cmd = app.add_subcommand("oracle", "grid-solver cross-check of the closed forms");
  oracle_cmd->fallthrough();
  oracle_cmd->add_option("--grid-n", grid_n, "grid resolution per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*value) return run_value(opt);
    if (*price) return run_price(opt);
    if (*welfare) return run_welfare(opt);
    if (*sweep) return run_sweep(opt, q0_min, q0_max, q0_steps, chi_min, chi_max, chi_steps);
    if (*fig_surface) return run_figure_ev_surface(opt, fig_steps);
    if (*fig_slice) return run_figure_ev_slice(opt, fig_steps);
    if (*fig_peq) return run_figure_p_eq_value(opt, fig_steps);
    if (*fig_ustar) return run_figure_u_star(opt, fig_steps);
    if (*fig_pc) return run_figure_public_credibility(opt, fig_steps);
    if (*fig_bench) return run_figure_benchmarks(opt, fig_steps);
    if (*simulate_cmd) return run_simulate(opt, sim_n);
    if (*verify_cmd) return run_verify(opt);
    if (*oracle_cmd) return run_oracle(opt, grid_n);
  } catch (const AssumptionViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
