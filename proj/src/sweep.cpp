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

#include "credence/sweep.hpp"

#include "credence/equilibrium.hpp"

namespace credence {

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 2) throw ConfigError("linspace needs at least two steps");
  std::vector<double> out;
  out.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / (steps - 1));
  }
  return out;
}

std::vector<double> grid_eval_serial(const std::vector<double>& outer,
                                     const std::vector<double>& inner, const GridFn& f) {
  std::vector<double> out(outer.size() * inner.size());
  for (size_t i = 0; i < outer.size(); ++i) {
    for (size_t j = 0; j < inner.size(); ++j) {
      out[i * inner.size() + j] = f(outer[i], inner[j]);
    }
  }
  return out;
}

std::vector<double> grid_eval(const std::vector<double>& outer,
                              const std::vector<double>& inner, const GridFn& f) {
  const long long ni = static_cast<long long>(inner.size());
  const long long total = static_cast<long long>(outer.size()) * ni;
  std::vector<double> out(static_cast<size_t>(total));
#pragma omp parallel for schedule(static)
  for (long long idx = 0; idx < total; ++idx) {
    out[static_cast<size_t>(idx)] =
        f(outer[static_cast<size_t>(idx / ni)], inner[static_cast<size_t>(idx % ni)]);
  }
  return out;
}

std::vector<double> equilibrium_value_surface(const ModelParams& params,
                                              const std::vector<double>& priors,
                                              const std::vector<double>& credibilities) {
  return grid_eval(priors, credibilities, [&](double q0, double chi) {
    return equilibrium_value(Scenario{params, q0, chi});
  });
}

}  // namespace credence
