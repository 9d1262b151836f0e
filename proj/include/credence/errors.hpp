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

#ifndef CREDENCE_ERRORS_HPP_
#define CREDENCE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace credence {

// Which of the four primitive assumptions a parameter set violates.
enum class Assumption {
  kCostOrder,         // c2 > c1
  kMinorEfficient,    // l1 > c1
  kSeriousEfficient,  // l2 > c2
  kSurplusOrder,      // l2 - c2 > l1 - c1
};

const char* assumption_name(Assumption a);

// Thrown when model primitives fail one of the strict assumption
// inequalities. `which()` identifies the first failing clause.
class AssumptionViolation : public std::invalid_argument {
 public:
  explicit AssumptionViolation(Assumption which)
      : std::invalid_argument(std::string("assumption violated: ") +
                              assumption_name(which)),
        which_(which) {}
  Assumption which() const { return which_; }

 private:
  Assumption which_;
};

// A price list outside the admissible set P. Rejected rather than clamped:
// clamping would silently change the game.
class InvalidPriceList : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called with a price list from the wrong margin region.
class RegionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numeric argument outside the operation's domain (e.g. a prior past the
// cutoff where a threshold formula is defined).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested a construction that only exists in a specific payoff mode.
class ModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Experiment / signalling strategy / client strategy disagree on the
// message alphabet.
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// No feasible point found by a constrained grid solver. Cannot occur for
// well-formed inputs; kept as a loud failure rather than a silent fallback.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid run configuration (bad sweep ranges, malformed flag values).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failed file read/write.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace credence

#endif  // CREDENCE_ERRORS_HPP_
