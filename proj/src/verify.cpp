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

#include "runstat/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "runstat/closedform.hpp"
#include "runstat/oracle.hpp"

namespace runstat {

bool SpecChecks::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::vector<Specification> all_specifications(int max_n, int max_k) {
  std::vector<Specification> specs;
  std::vector<int> counts;
  auto compose = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      specs.emplace_back(counts);
      return;
    }
    if (static_cast<int>(counts.size()) == max_k) return;
    for (int c = 1; c <= remaining; ++c) {
      counts.push_back(c);
      self(self, remaining - c);
      counts.pop_back();
    }
  };
  for (int n = 1; n <= max_n; ++n) compose(compose, n);
  return specs;
}

namespace {

constexpr std::array<TrackerMode, 4> kAllModes = {
    TrackerMode::kRS, TrackerMode::kRSTotalRuns, TrackerMode::kRSLTotalRuns,
    TrackerMode::kRSLPerRuns};

struct CheckOutcome {
  bool passed = true;
  std::string detail;

  void fail(std::string message) {
    if (passed) {
      passed = false;
      detail = std::move(message);
    }
  }
};

SpecChecks run_spec_checks(const Specification& spec, const VerifyOptions& options) {
  SpecChecks result{spec, {}, {}};
  const VarContextPtr ctx = make_var_context(spec);
  const int n = spec.total();

  std::vector<Polynomial> recursive, matrix, extracted;
  for (TrackerMode mode : kAllModes) {
    recursive.push_back(gf_recursive(spec, mode));
    matrix.push_back(gf_matrix(spec, mode));
  }

  CheckOutcome path_eq;
  for (size_t i = 0; i < kAllModes.size(); ++i) {
    if (!(recursive[i] == matrix[i])) {
      path_eq.fail("recursive != matrix in mode " + to_string(kAllModes[i]));
    }
  }

  CheckOutcome explicit_id;
  for (size_t i = 0; i < kAllModes.size(); ++i) {
    if (!gf_explicit_check(spec, kAllModes[i], recursive[i]) ||
        !gf_explicit_check(spec, kAllModes[i], matrix[i])) {
      explicit_id.fail("product identity fails in mode " + to_string(kAllModes[i]));
    }
  }

  const DistributionTable table = enumerate_stats_serial(spec, options.oracle_bound);

  for (size_t i = 0; i < kAllModes.size(); ++i) {
    extracted.push_back(coeff_extract(recursive[i], spec.counts()));
  }

  CheckOutcome oracle_marg;
  for (size_t i = 0; i < kAllModes.size(); ++i) {
    if (!(extracted[i] == marginal_polynomial(table, kAllModes[i], ctx))) {
      oracle_marg.fail("extraction != oracle marginal in mode " + to_string(kAllModes[i]));
    }
  }

  CheckOutcome closed_form;
  const Polynomial& rs_poly = extracted[0];
  for (int r = 0; r <= n - 1; ++r) {
    for (int s = 0; r + s <= n - 1; ++s) {
      BigInt from_closed;
      if (options.joint_rs_counter) {
        from_closed = options.joint_rs_counter(spec, r, s);
      } else {
        from_closed = count_rises_falls({spec, r, s});
      }
      Monomial m{std::vector<int>(static_cast<size_t>(ctx->num_vars()), 0)};
      m.exps[VarContext::kW] = r;
      m.exps[VarContext::kU] = s;
      const BigInt from_gf = rs_poly.coeff(m);
      if (from_closed != from_gf) {
        std::ostringstream msg;
        msg << "A([" << spec.to_string() << "]; r=" << r << ", s=" << s
            << "): closed=" << from_closed << " gf=" << from_gf;
        closed_form.fail(msg.str());
        break;
      }
    }
    if (!closed_form.passed) break;
  }

  CheckOutcome newcomb_marg;
  for (int r = 0; r <= n - 1; ++r) {
    BigInt joint_sum = 0;
    for (const auto& [profile, count] : table.entries) {
      if (profile.rises == r) joint_sum += count;
    }
    if (newcomb(spec, r) != joint_sum) {
      newcomb_marg.fail("newcomb(r=" + std::to_string(r) + ") != joint marginal");
      break;
    }
  }

  CheckOutcome total_mass;
  {
    const BigInt expected = spec.multinomial();
    if (table.total() != expected) total_mass.fail("oracle total != multinomial");
    BigInt gf_mass = 0;
    for (const auto& [m, c] : extracted[3].terms()) gf_mass += c;
    if (gf_mass != expected) total_mass.fail("generating-function mass != multinomial");
  }

  CheckOutcome mode_consist;
  {
    // rsb with t := 1 collapses to rs
    if (!(poly_set_var_one(recursive[1], VarContext::kT) == recursive[0])) {
      mode_consist.fail("rsb with t:=1 != rs");
    }
    // rslb with v := 1 collapses to rsb
    if (!(poly_set_var_one(recursive[2], VarContext::kV) == recursive[1])) {
      mode_consist.fail("rslb with v:=1 != rsb");
    }
    // rslB with every t_i := t and v := 1 collapses to rsb
    Polynomial folded = recursive[3];
    for (int i = 1; i <= spec.k(); ++i) {
      folded = poly_fold_var(folded, ctx->t_index(i), VarContext::kT);
    }
    folded = poly_set_var_one(folded, VarContext::kV);
    if (!(folded == recursive[1])) {
      mode_consist.fail("rslB with t_i:=t, v:=1 != rsb");
    }
  }

  CheckOutcome struct_zero;
  {
    for (const auto& [profile, count] : table.entries) {
      const int r = profile.rises, s = profile.falls, l = profile.levels, b = profile.runs;
      const int b_sum = std::accumulate(profile.runs_per.begin(), profile.runs_per.end(), 0);
      bool per_ok = true;
      for (int i = 1; i <= spec.k(); ++i) {
        const int bi = profile.runs_per[static_cast<size_t>(i - 1)];
        if (bi < 1 || bi > spec.count(i)) per_ok = false;
      }
      if (r + s + l != n - 1 || b + l != n || r + s + 1 != b || b_sum != b || !per_ok) {
        struct_zero.fail("profile violates the linear relations");
        break;
      }
    }
    // rsb extraction: t exponent == w + u + 1 on every surviving monomial
    for (const auto& [m, c] : extracted[1].terms()) {
      if (m.exp(VarContext::kT) != m.exp(VarContext::kW) + m.exp(VarContext::kU) + 1) {
        struct_zero.fail("rsb monomial violates t = w + u + 1");
        break;
      }
    }
    // rslb extraction: t + v == n and w + u + v == n - 1
    for (const auto& [m, c] : extracted[2].terms()) {
      if (m.exp(VarContext::kT) + m.exp(VarContext::kV) != n ||
          m.exp(VarContext::kW) + m.exp(VarContext::kU) + m.exp(VarContext::kV) != n - 1) {
        struct_zero.fail("rslb monomial violates the level relations");
        break;
      }
    }
    // rslB extraction: per-symbol runs bounded by the specification
    for (const auto& [m, c] : extracted[3].terms()) {
      int b_sum = 0;
      bool ok = true;
      for (int i = 1; i <= spec.k(); ++i) {
        const int bi = m.exp(ctx->t_index(i));
        b_sum += bi;
        if (bi < 1 || bi > spec.count(i)) ok = false;
      }
      if (!ok || b_sum != m.exp(VarContext::kW) + m.exp(VarContext::kU) + 1) {
        struct_zero.fail("rslB monomial violates the per-symbol relations");
        break;
      }
    }
  }

  const std::array<CheckOutcome*, 8> outcomes = {&path_eq,      &explicit_id, &oracle_marg,
                                                 &closed_form,  &newcomb_marg, &total_mass,
                                                 &mode_consist, &struct_zero};
  for (size_t i = 0; i < outcomes.size(); ++i) {
    result.checks.emplace_back(kVerifyCheckNames[i], outcomes[i]->passed);
    if (!outcomes[i]->passed && result.first_detail.empty()) {
      result.first_detail = outcomes[i]->detail;
    }
  }
  return result;
}

}  // namespace

VerifyReport run_verification_sweep(const VerifyOptions& options) {
  const std::vector<Specification> specs = all_specifications(options.max_n, options.max_k);

  // Scheduling order may be shuffled for load balance; report order is not.
  std::vector<size_t> order(specs.size());
  std::iota(order.begin(), order.end(), size_t{0});
  if (options.seed != 0) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  std::vector<SpecChecks> results;
  results.reserve(specs.size());
  for (const Specification& spec : specs) results.push_back(SpecChecks{spec, {}, {}});

  const auto run_one = [&](size_t index) {
    const Specification& spec = specs[index];
    try {
      results[index] = run_spec_checks(spec, options);
    } catch (const std::exception& e) {
      SpecChecks failed{spec, {}, e.what()};
      for (const char* name : kVerifyCheckNames) failed.checks.emplace_back(name, false);
      results[index] = std::move(failed);
    }
  };

  if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(order.size()); ++i) {
      run_one(order[static_cast<size_t>(i)]);
    }
  } else {
    for (size_t i : order) run_one(i);
  }

  VerifyReport report{std::move(results), std::nullopt};
  for (const SpecChecks& spec_result : report.results) {
    if (spec_result.all_passed()) continue;
    for (const auto& [name, passed] : spec_result.checks) {
      if (!passed) {
        report.first_failure = VerifyReport::Failure{spec_result.spec.to_string(), name,
                                                     spec_result.first_detail};
        break;
      }
    }
    break;
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  constexpr int kSpecWidth = 12;
  out << std::left << std::setw(kSpecWidth) << "spec";
  for (const char* name : kVerifyCheckNames) {
    out << std::setw(static_cast<int>(std::string(name).size()) + 2) << name;
  }
  out << "\n";
  size_t checks_run = 0;
  size_t checks_passed = 0;
  for (const SpecChecks& spec_result : report.results) {
    out << std::setw(kSpecWidth) << spec_result.spec.to_string();
    for (const auto& [name, passed] : spec_result.checks) {
      out << std::setw(static_cast<int>(name.size()) + 2) << (passed ? "ok" : "FAIL");
      ++checks_run;
      checks_passed += passed ? 1 : 0;
    }
    out << "\n";
  }
  out << checks_passed << "/" << checks_run << " checks passed over " << report.results.size()
      << " specifications\n";
  if (report.first_failure) {
    out << "first failure: spec [" << report.first_failure->spec << "], check "
        << report.first_failure->check;
    if (!report.first_failure->detail.empty()) {
      out << ": " << report.first_failure->detail;
    }
    out << "\n";
  }
}

}  // namespace runstat
