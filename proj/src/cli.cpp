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

#include "runstat/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "runstat/closedform.hpp"
#include "runstat/errors.hpp"
#include "runstat/genfun.hpp"
#include "runstat/oracle.hpp"
#include "runstat/table.hpp"
#include "runstat/verify.hpp"

namespace runstat {

namespace {

int oracle_bound_from_env(std::ostream& err, bool& ok) {
  ok = true;
  const char* raw = std::getenv("RUNSTAT_ORACLE_BOUND");
  if (raw == nullptr) return kDefaultEnumerationBound;
  try {
    const int bound = std::stoi(raw);
    if (bound < 1) throw std::invalid_argument("non-positive");
    return bound;
  } catch (const std::exception&) {
    err << "RUNSTAT_ORACLE_BOUND must be a positive integer, got '" << raw << "'\n";
    ok = false;
    return kDefaultEnumerationBound;
  }
}

Specification parse_spec_or_throw(const std::string& text) {
  auto spec = Specification::parse(text);
  if (!spec) {
    throw std::invalid_argument("--spec expects comma-separated positive integers, got '" +
                                text + "'");
  }
  return *spec;
}

TrackerMode parse_mode_or_throw(const std::string& text) {
  auto mode = parse_tracker_mode(text);
  if (!mode) {
    throw std::invalid_argument("--mode must be one of rs, rsb, rslb, rslB (case-sensitive)");
  }
  return *mode;
}

Polynomial extracted_coefficient(const Specification& spec, TrackerMode mode,
                                 const std::string& path, int bound) {
  if (path == "oracle") {
    const DistributionTable table = enumerate_stats(spec, bound);
    return marginal_polynomial(table, mode, make_var_context(spec));
  }
  std::shared_ptr<const Polynomial> g;
  if (path == "explicit") {
    g = std::make_shared<const Polynomial>(gf_explicit_construct(spec, mode));
  } else {
    const GfPath gf_path = path == "matrix" ? GfPath::kMatrix : GfPath::kRecursive;
    g = global_gf_cache().get(spec, mode, gf_path);
  }
  return coeff_extract(*g, spec.counts());
}

BigInt oracle_rise_marginal(const Specification& spec, int r, int bound) {
  const DistributionTable table = enumerate_stats(spec, bound);
  BigInt total = 0;
  for (const auto& [profile, count] : table.entries) {
    if (profile.rises == r) total += count;
  }
  return total;
}

BigInt oracle_joint_rs(const Specification& spec, int r, int s, int bound) {
  const DistributionTable table = enumerate_stats(spec, bound);
  BigInt total = 0;
  for (const auto& [profile, count] : table.entries) {
    if (profile.rises == r && profile.falls == s) total += count;
  }
  return total;
}

int cmd_dist(const std::string& spec_text, const std::string& mode_text, const std::string& path,
             const std::string& format, int bound, std::ostream& out) {
  const Specification spec = parse_spec_or_throw(spec_text);
  const TrackerMode mode = parse_mode_or_throw(mode_text);
  const OutputRecord record =
      path == "oracle"
          ? record_from_oracle(spec, mode, enumerate_stats(spec, bound))
          : record_from_polynomial(spec, mode, extracted_coefficient(spec, mode, path, bound),
                                   path);
  out << (format == "csv" ? record_to_csv(record) : record_to_json(record));
  if (format != "csv") out << "\n";
  return kExitOk;
}

int cmd_gf(const std::string& spec_text, const std::string& mode_text, const std::string& path,
           int bound, std::ostream& out) {
  const Specification spec = parse_spec_or_throw(spec_text);
  const TrackerMode mode = parse_mode_or_throw(mode_text);
  out << extracted_coefficient(spec, mode, path, bound).to_string() << "\n";
  return kExitOk;
}

int cmd_closed(const std::string& spec_text, int r, int s, const std::string& path, int bound,
               std::ostream& out) {
  const Specification spec = parse_spec_or_throw(spec_text);
  validate(RiseFallQuery{spec, r, s});
  const BigInt value =
      path == "oracle" ? oracle_joint_rs(spec, r, s, bound) : count_rises_falls({spec, r, s});
  out << value.str() << "\n";
  return kExitOk;
}

int cmd_newcomb(const std::string& spec_text, int r, const std::string& path, int bound,
                std::ostream& out) {
  const Specification spec = parse_spec_or_throw(spec_text);
  if (r < 0 || r > spec.total() - 1) {
    throw std::invalid_argument("--r must satisfy 0 <= r <= n - 1");
  }
  const BigInt value =
      path == "oracle" ? oracle_rise_marginal(spec, r, bound) : newcomb(spec, r);
  out << value.str() << "\n";
  return kExitOk;
}

int cmd_eulerian(int k, std::optional<int> r, const std::string& path, int bound,
                 std::ostream& out) {
  if (k < 1) throw std::invalid_argument("--k must be >= 1");
  const Specification spec{std::vector<int>(static_cast<size_t>(k), 1)};
  auto value_at = [&](int rr) {
    return path == "oracle" ? oracle_rise_marginal(spec, rr, bound) : eulerian(k, rr);
  };
  if (r) {
    if (*r < 0 || *r > k - 1) throw std::invalid_argument("--r must satisfy 0 <= r <= k - 1");
    out << value_at(*r).str() << "\n";
    return kExitOk;
  }
  for (int rr = 0; rr < k; ++rr) {
    if (rr) out << " ";
    out << value_at(rr).str();
  }
  out << "\n";
  return kExitOk;
}

int cmd_verify(int max_n, int max_k, unsigned long long seed, bool serial, int bound,
               std::ostream& out) {
  if (max_n < 1 || max_k < 1) throw std::invalid_argument("--max-n and --max-k must be >= 1");
  if (max_n > bound) {
    throw std::invalid_argument("--max-n exceeds the enumeration bound " + std::to_string(bound));
  }
  VerifyOptions options;
  options.max_n = max_n;
  options.max_k = max_k;
  options.seed = seed;
  options.oracle_bound = bound;
  options.parallel = !serial;
  const VerifyReport report = run_verification_sweep(options);
  print_report(report, out);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact joint distributions of rises, falls, levels, and runs over all "
               "permutations of a multiset"};
  app.require_subcommand(1);

  std::string spec_text;
  std::string dist_mode;
  std::string gf_mode = "rs";
  std::string dist_path = "recursive";
  std::string gf_path = "recursive";
  std::string value_path = "closed";
  std::string format = "json";
  int r = 0;
  int s = 0;
  int k = 1;
  int max_n = 8;
  int max_k = 4;
  unsigned long long seed = 0;
  bool serial = false;
  std::optional<int> eulerian_r;

  CLI::App* dist = app.add_subcommand("dist", "full distribution table for a specification");
  dist->add_option("--spec", spec_text, "multiplicities, e.g. 2,3")->required();
  dist->add_option("--mode", dist_mode, "statistics to track: rs, rsb, rslb, rslB")->required();
  dist->add_option("--path", dist_path, "recursive, matrix, or oracle")
      ->check(CLI::IsMember({"recursive", "matrix", "oracle"}));
  dist->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  CLI::App* gf = app.add_subcommand("gf", "coefficient polynomial of the generating function");
  gf->add_option("--spec", spec_text, "multiplicities, e.g. 2,3")->required();
  gf->add_option("--mode", gf_mode, "statistics to track (default rs)");
  gf->add_option("--path", gf_path, "recursive, matrix, explicit, or oracle")
      ->check(CLI::IsMember({"recursive", "matrix", "explicit", "oracle"}));

  CLI::App* closed = app.add_subcommand("closed", "closed-form count of sequences with r rises "
                                                  "and s falls");
  closed->add_option("--spec", spec_text)->required();
  closed->add_option("--r", r, "rises")->required();
  closed->add_option("--s", s, "falls")->required();
  closed->add_option("--path", value_path, "closed or oracle")
      ->check(CLI::IsMember({"closed", "oracle"}));

  CLI::App* newcomb_cmd = app.add_subcommand("newcomb", "rise-count distribution value");
  newcomb_cmd->add_option("--spec", spec_text)->required();
  newcomb_cmd->add_option("--r", r, "rises")->required();
  newcomb_cmd->add_option("--path", value_path, "closed or oracle")
      ->check(CLI::IsMember({"closed", "oracle"}));

  CLI::App* eulerian_cmd = app.add_subcommand("eulerian", "Eulerian numbers A(k, r)");
  eulerian_cmd->add_option("--k", k, "number of distinct symbols")->required();
  eulerian_cmd->add_option("--r", eulerian_r, "rises; omit for the whole row");
  eulerian_cmd->add_option("--path", value_path, "closed or oracle")
      ->check(CLI::IsMember({"closed", "oracle"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "cross-validate every construction path "
                                                      "against the oracle");
  verify_cmd->add_option("--max-n", max_n, "largest total multiplicity to sweep");
  verify_cmd->add_option("--max-k", max_k, "largest number of distinct symbols");
  verify_cmd->add_option("--seed", seed, "shuffles work order only; results are deterministic");
  verify_cmd->add_flag("--serial", serial, "disable the worker pool");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("runstat");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  bool env_ok = true;
  const int bound = oracle_bound_from_env(err, env_ok);
  if (!env_ok) return kExitUsage;

  try {
    if (dist->parsed()) return cmd_dist(spec_text, dist_mode, dist_path, format, bound, out);
    if (gf->parsed()) return cmd_gf(spec_text, gf_mode, gf_path, bound, out);
    if (closed->parsed()) return cmd_closed(spec_text, r, s, value_path, bound, out);
    if (newcomb_cmd->parsed()) return cmd_newcomb(spec_text, r, value_path, bound, out);
    if (eulerian_cmd->parsed()) return cmd_eulerian(k, eulerian_r, value_path, bound, out);
    if (verify_cmd->parsed()) return cmd_verify(max_n, max_k, seed, serial, bound, out);
  } catch (const EnumerationBoundError& e) {
    err << e.what() << "\n";
    return kExitResourceBound;
  } catch (const FormulaIntegrityError& e) {
    err << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const DivisibilityError& e) {
    err << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  err << "no subcommand given\n";
  return kExitUsage;
}

}  // namespace runstat
