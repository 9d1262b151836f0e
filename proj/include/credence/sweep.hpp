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

// Parameter sweeps over (prior, credibility) grids. The parallel kernel
// fans cells out across OpenMP threads but writes each row by index, so
// output ordering is by (outer, inner) value regardless of scheduling.

#ifndef CREDENCE_SWEEP_HPP_
#define CREDENCE_SWEEP_HPP_

#include <functional>
#include <vector>

#include "credence/model.hpp"

namespace credence {

// steps >= 2 evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int steps);

using GridFn = std::function<double(double outer, double inner)>;

// Evaluates f on the outer x inner grid, row-major in the outer axis.
std::vector<double> grid_eval(const std::vector<double>& outer,
                              const std::vector<double>& inner, const GridFn& f);
std::vector<double> grid_eval_serial(const std::vector<double>& outer,
                                     const std::vector<double>& inner, const GridFn& f);

// Equilibrium-value surface ev(q0, chi) on priors x credibilities.
std::vector<double> equilibrium_value_surface(const ModelParams& params,
                                              const std::vector<double>& priors,
                                              const std::vector<double>& credibilities);

}  // namespace credence

#endif  // CREDENCE_SWEEP_HPP_
