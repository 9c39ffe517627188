// Copyright 2026 The sccodes Authors
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

#ifndef SCCODES_ERROR_HPP_
#define SCCODES_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sccodes {

// Bad arguments: malformed polynomials, dimension mismatches, reducible
// moduli, out-of-range index sets.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration would exceed the configured message/length budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Strict mode: the requested instance satisfies none of the theorem
// hypotheses.
class HypothesisViolation : public std::runtime_error {
 public:
  explicit HypothesisViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace sccodes

#endif  // SCCODES_ERROR_HPP_
