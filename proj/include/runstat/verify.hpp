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

#ifndef RUNSTAT_VERIFY_HPP
#define RUNSTAT_VERIFY_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "runstat/bigint.hpp"
#include "runstat/genfun.hpp"

namespace runstat {

// The per-specification checks of the master sweep, in report column order.
inline constexpr std::array<const char*, 8> kVerifyCheckNames = {
    "path-eq",       // gf_recursive == gf_matrix, every mode
    "explicit-id",   // product identity holds multiplicatively
    "oracle-marg",   // extracted coefficients == brute-force marginals
    "closed-form",   // count_rises_falls == (r, s) coefficient, full grid
    "newcomb-marg",  // sum_s of the joint == the rise-only closed form
    "total-mass",    // counts sum to the multinomial
    "mode-consist",  // substitution relations between the four modes
    "struct-zero",   // linear relations hold on every nonzero entry
};

struct VerifyOptions {
  int max_n = 8;
  int max_k = 4;
  // Shuffles the processing order across the worker pool; results and report
  // order are independent of it.
  unsigned long long seed = 0;
  int oracle_bound = kDefaultEnumerationBound;
  bool parallel = true;
  // Replacement joint counter, used to demonstrate that a broken closed form
  // is caught. Empty means count_rises_falls.
  std::function<BigInt(const Specification&, int r, int s)> joint_rs_counter;
};

struct SpecChecks {
  Specification spec;
  std::vector<std::pair<std::string, bool>> checks;  // (name, passed)
  std::string first_detail;  // detail of the first failed check, if any

  bool all_passed() const;
};

struct VerifyReport {
  std::vector<SpecChecks> results;  // ascending (n, spec) order

  struct Failure {
    std::string spec;
    std::string check;
    std::string detail;
  };
  // First failure in report order, independent of scheduling.
  std::optional<Failure> first_failure;

  bool all_passed() const { return !first_failure.has_value(); }
};

// Every specification with 1 <= k <= max_k symbols and total n <= max_n,
// ordered by (n, counts) ascending.
std::vector<Specification> all_specifications(int max_n, int max_k);

// Runs every check on every specification in range. Work is sharded across an
// OpenMP pool; each (spec, check) cell is independent.
VerifyReport run_verification_sweep(const VerifyOptions& options);

// Pass/fail matrix, one row per specification, plus a summary line.
void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace runstat

#endif  // RUNSTAT_VERIFY_HPP
