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

#ifndef RUNSTAT_GENFUN_HPP
#define RUNSTAT_GENFUN_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "runstat/algebra.hpp"
#include "runstat/bigint.hpp"

namespace runstat {

// Multiplicity vector [n_1..n_k] of the multiset; sequences are its distinct
// permutations.
class Specification {
 public:
  explicit Specification(std::vector<int> counts);

  int k() const { return static_cast<int>(counts_.size()); }
  int total() const { return total_; }
  const std::vector<int>& counts() const { return counts_; }
  int count(int symbol) const { return counts_[static_cast<size_t>(symbol - 1)]; }

  // n! / (n_1! ... n_k!), the number of distinct permutations.
  BigInt multinomial() const;

  // "2,3" <-> [2,3]. Returns nullopt on malformed input.
  static std::optional<Specification> parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const Specification&) const = default;
  auto operator<=>(const Specification&) const = default;

 private:
  std::vector<int> counts_;
  int total_;
};

// Which statistics the per-symbol series carry:
//   kRS            g_i = sum_j x_i^j               (rises, falls)
//   kRSTotalRuns   g_i = t sum_j x_i^j             (+ total runs)
//   kRSLTotalRuns  g_i = t sum_j x_i^j v^{j-1}     (+ levels)
//   kRSLPerRuns    g_i = t_i sum_j x_i^j v^{j-1}   (+ per-symbol runs)
enum class TrackerMode { kRS, kRSTotalRuns, kRSLTotalRuns, kRSLPerRuns };

enum class GfPath { kRecursive, kMatrix, kExplicitCheck };

// CLI spellings: rs, rsb, rslb, rslB (case-sensitive).
std::optional<TrackerMode> parse_tracker_mode(std::string_view text);
std::string to_string(TrackerMode mode);

// Context with caps n_i on x_i; higher powers are never needed.
VarContextPtr make_var_context(const Specification& spec);

// Finite truncation of the per-symbol series for the given mode: no constant
// term, x_i-degree between 1 and n_i.
Polynomial build_g(int symbol, const Specification& spec, TrackerMode mode,
                   const VarContextPtr& ctx);

// Master generating function by the recursive construction:
// G_j = G_{j-1} + g_j (1 + w G_{j-1})(1 + u G_{j-1}) / (1 - w u g_j G_{j-1}),
// starting from G_1 = g_1, with the denominator inverted as a unit series.
Polynomial gf_recursive(const Specification& spec, TrackerMode mode);

// Same value via the matrix formulation: the system matrix is I - N with
// N(i,j) = g_i u below the diagonal and g_i w above it, and the inverse is
// applied to [g_1..g_k] as a terminating Neumann sum. Only the iterated
// vectors are materialized, never the inverse itself.
Polynomial gf_matrix(const Specification& spec, TrackerMode mode);

// Multiplicative verification of the product identity
//   (u Q_k - w P_k) G = P_k - Q_k,  P_k = prod(1 + g_i u), Q_k = prod(1 + g_i w),
// exact in the truncated ring. No division involved.
bool gf_explicit_check(const Specification& spec, TrackerMode mode, const Polynomial& g);

// Constructive counterpart of the identity above: both sides are exactly
// divisible by (u - w); after that division the denominator is a unit series.
// Kept off the default paths; exists for completeness and cross-checks.
Polynomial gf_explicit_construct(const Specification& spec, TrackerMode mode);

// Per-(spec, mode, path) cache of built generating functions. Results are
// deterministic, so concurrent duplicate builds are benign (last write wins).
class GfCache {
 public:
  std::shared_ptr<const Polynomial> get(const Specification& spec, TrackerMode mode,
                                        GfPath path = GfPath::kRecursive);
  void clear();

 private:
  using Key = std::tuple<std::vector<int>, TrackerMode, GfPath>;
  std::mutex mu_;
  std::map<Key, std::shared_ptr<const Polynomial>> cache_;
};

GfCache& global_gf_cache();

}  // namespace runstat

#endif  // RUNSTAT_GENFUN_HPP
