// Copyright 2026 The runstat Authors
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

#ifndef RUNSTAT_ERRORS_HPP
#define RUNSTAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace runstat {

// Two polynomials from different variable contexts were combined.
class ContextMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Series inversion requested for a polynomial whose constant term is not 1.
class NotAUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series inversion would not terminate: the perturbation has a term with no
// x-part, so powers never leave the truncated ring.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact division left a nonzero remainder. Signals a broken identity.
class DivisibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Brute-force enumeration refused: total length above the configured bound.
class EnumerationBoundError : public std::runtime_error {
 public:
  EnumerationBoundError(int n, int bound)
      : std::runtime_error("enumeration bound exceeded: n = " + std::to_string(n) +
                           " > bound " + std::to_string(bound)),
        n_(n),
        bound_(bound) {}
  int n() const { return n_; }
  int bound() const { return bound_; }

 private:
  int n_;
  int bound_;
};

// A closed-form total that must be an integer came out fractional.
// Must never fire; it is asserted, not handled.
class FormulaIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace runstat

#endif  // RUNSTAT_ERRORS_HPP
