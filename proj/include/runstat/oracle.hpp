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

#ifndef RUNSTAT_ORACLE_HPP
#define RUNSTAT_ORACLE_HPP

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "runstat/bigint.hpp"
#include "runstat/genfun.hpp"

namespace runstat {

// One outcome class: rises, falls, levels, total runs, runs per symbol.
// Profiles from a valid sequence always satisfy
//   r + s + l = n - 1,   b + l = n,   r + s + 1 = b,   sum b_i = b.
struct StatProfile {
  int rises = 0;
  int falls = 0;
  int levels = 0;
  int runs = 0;
  std::vector<int> runs_per;

  // Member order gives exactly the (r, s, l, b, b_per) ascending sort key.
  auto operator<=>(const StatProfile&) const = default;
};

// Profile of a single sequence over symbols 1..k. Throws on an empty
// sequence or an out-of-range symbol.
StatProfile stats_of_sequence(std::span<const int> seq, int k);

// Exact distribution over all distinct permutations of the multiset.
struct DistributionTable {
  Specification spec;
  std::map<StatProfile, BigInt> entries;

  BigInt total() const;

  // Associative addition of counts; shards of one enumeration merge to the
  // full table.
  void merge(const DistributionTable& other);
};

// 12 distinct symbols is ~4.8e8 permutations, the practical desk ceiling.
inline constexpr int kDefaultEnumerationBound = 12;

// Reference enumerator: sorted start, in-place next-permutation stepping.
// Visits each distinct arrangement exactly once; the visit count is checked
// against the multinomial. Throws EnumerationBoundError when n exceeds bound.
DistributionTable enumerate_stats_serial(const Specification& spec,
                                         int bound = kDefaultEnumerationBound);

// OpenMP enumerator: shards the sequence space by its leading symbols and
// merges per-shard tables. Produces a table identical to the serial one.
DistributionTable enumerate_stats(const Specification& spec,
                                  int bound = kDefaultEnumerationBound);

// The coefficient polynomial the table predicts for a tracking mode: what
// coeff_extract of the matching generating function must equal.
Polynomial marginal_polynomial(const DistributionTable& table, TrackerMode mode,
                               const VarContextPtr& ctx);

}  // namespace runstat

#endif  // RUNSTAT_ORACLE_HPP
