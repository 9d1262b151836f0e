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

// Times the OpenMP kernels against their serial references and checks the
// results agree bit for bit. Thread count follows OMP_NUM_THREADS.

#include <chrono>
#include <cstdio>
#include <functional>

#include "credence/equilibrium.hpp"
#include "credence/oracle.hpp"
#include "credence/sweep.hpp"

using namespace credence;

namespace {

double time_of(const std::function<void()>& fn, int reps) {
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-24s %10.4f ms %10.4f ms   x%.2f   %s\n", name, serial * 1e3, parallel * 1e3,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  ModelParams par = validate_params(1, 3, 4, 10);
  Scenario s{par, 0.25, 0.6};
  PriceList p(4, 7, par);

  std::printf("%-24s %13s %13s %7s\n", "kernel", "serial", "openmp", "speedup");

  {
    ProgramSolution a{}, b{};
    double ts = time_of([&] { a = solve_program_serial(s, p, 801); }, 3);
    double tp = time_of([&] { b = solve_program(s, p, 801); }, 3);
    row("solve_program(801)", ts, tp, a.value == b.value && a.beta == b.beta &&
                                          a.gamma == b.gamma && a.k == b.k);
  }
  {
    double va = 0, vb = 0;
    double p1a = 0, p1b = 0;
    double ts = time_of([&] {
      auto r = price_search_serial(s, 401);
      va = r.value;
      p1a = r.prices.p1();
    }, 3);
    double tp = time_of([&] {
      auto r = price_search(s, 401);
      vb = r.value;
      p1b = r.prices.p1();
    }, 3);
    row("price_search(401)", ts, tp, va == vb && p1a == p1b);
  }
  {
    auto q0s = linspace(1e-3, 1.0 - 1e-3, 1500);
    auto chis = linspace(0.0, 1.0, 1500);
    GridFn f = [&](double q0, double chi) {
      return equilibrium_value(Scenario{par, q0, chi});
    };
    std::vector<double> a, b;
    double ts = time_of([&] { a = grid_eval_serial(q0s, chis, f); }, 3);
    double tp = time_of([&] { b = grid_eval(q0s, chis, f); }, 3);
    row("ev_surface(1500^2)", ts, tp, a == b);
  }
  return 0;
}
