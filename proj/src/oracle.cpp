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

#include "runstat/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "runstat/errors.hpp"

namespace runstat {

StatProfile stats_of_sequence(std::span<const int> seq, int k) {
  if (seq.empty()) throw std::invalid_argument("stats_of_sequence: empty sequence");
  if (k < 1) throw std::invalid_argument("stats_of_sequence: k must be >= 1");

  StatProfile profile;
  profile.runs_per.assign(static_cast<size_t>(k), 0);

  int prev = 0;  // no symbol is 0, so the first element always opens a run
  for (size_t i = 0; i < seq.size(); ++i) {
    const int a = seq[i];
    if (a < 1 || a > k) throw std::invalid_argument("stats_of_sequence: symbol out of range");
    if (i > 0) {
      if (prev < a) ++profile.rises;
      else if (prev > a) ++profile.falls;
      else ++profile.levels;
    }
    if (a != prev) {
      ++profile.runs;
      ++profile.runs_per[static_cast<size_t>(a - 1)];
    }
    prev = a;
  }
  return profile;
}

BigInt DistributionTable::total() const {
  BigInt sum = 0;
  for (const auto& [profile, count] : entries) sum += count;
  return sum;
}

void DistributionTable::merge(const DistributionTable& other) {
  if (!(spec == other.spec)) {
    throw std::invalid_argument("DistributionTable::merge: different specifications");
  }
  for (const auto& [profile, count] : other.entries) entries[profile] += count;
}

namespace {

void check_bound(const Specification& spec, int bound) {
  if (spec.total() > bound) throw EnumerationBoundError(spec.total(), bound);
}

// Enumerates all distinct permutations of seq[fixed..] (which must arrive
// sorted), tallying the profile of the whole sequence each time.
// Returns the number of sequences visited.
std::uint64_t enumerate_suffix(std::vector<int>& seq, size_t fixed, int k,
                               DistributionTable& table) {
  std::uint64_t visited = 0;
  auto first = seq.begin() + static_cast<std::ptrdiff_t>(fixed);
  do {
    table.entries[stats_of_sequence(seq, k)] += 1;
    ++visited;
  } while (std::next_permutation(first, seq.end()));
  return visited;
}

std::vector<int> sorted_sequence(const Specification& spec) {
  std::vector<int> seq;
  seq.reserve(static_cast<size_t>(spec.total()));
  for (int symbol = 1; symbol <= spec.k(); ++symbol) {
    seq.insert(seq.end(), static_cast<size_t>(spec.count(symbol)), symbol);
  }
  return seq;
}

}  // namespace

DistributionTable enumerate_stats_serial(const Specification& spec, int bound) {
  check_bound(spec, bound);
  DistributionTable table{spec, {}};
  std::vector<int> seq = sorted_sequence(spec);
  const std::uint64_t visited = enumerate_suffix(seq, 0, spec.k(), table);
  if (BigInt(visited) != spec.multinomial()) {
    throw FormulaIntegrityError("enumerate_stats_serial: visit count != multinomial");
  }
  return table;
}

Polynomial marginal_polynomial(const DistributionTable& table, TrackerMode mode,
                               const VarContextPtr& ctx) {
  Polynomial expected(ctx);
  for (const auto& [profile, count] : table.entries) {
    Monomial m{std::vector<int>(static_cast<size_t>(ctx->num_vars()), 0)};
    m.exps[VarContext::kW] = profile.rises;
    m.exps[VarContext::kU] = profile.falls;
    switch (mode) {
      case TrackerMode::kRS:
        break;
      case TrackerMode::kRSTotalRuns:
        m.exps[VarContext::kT] = profile.runs;
        break;
      case TrackerMode::kRSLTotalRuns:
        m.exps[VarContext::kV] = profile.levels;
        m.exps[VarContext::kT] = profile.runs;
        break;
      case TrackerMode::kRSLPerRuns:
        m.exps[VarContext::kV] = profile.levels;
        for (int i = 1; i <= ctx->k(); ++i) {
          m.exps[static_cast<size_t>(ctx->t_index(i))] =
              profile.runs_per[static_cast<size_t>(i - 1)];
        }
        break;
    }
    expected.add_term(m, count);
  }
  return expected;
}

DistributionTable enumerate_stats(const Specification& spec, int bound) {
  check_bound(spec, bound);
#ifndef _OPENMP
  return enumerate_stats_serial(spec, bound);
#else
  const int n = spec.total();
  if (n <= 7 || omp_get_max_threads() == 1 || omp_in_parallel()) {
    return enumerate_stats_serial(spec, bound);
  }

  // Shard by the first two symbols: each shard fixes a prefix and owns every
  // sequence extending it, so shards partition the space and their tables
  // merge by addition. n > 7 here, so a depth-2 prefix always exists.
  const int depth = 2;
  struct Shard {
    std::vector<int> prefix;
    std::vector<int> remaining;  // counts left after the prefix
  };
  std::vector<Shard> shards;
  std::vector<int> prefix;
  std::vector<int> remaining = spec.counts();
  auto expand = [&](auto&& self, int level) -> void {
    if (level == depth) {
      shards.push_back({prefix, remaining});
      return;
    }
    for (int symbol = 1; symbol <= spec.k(); ++symbol) {
      auto& available = remaining[static_cast<size_t>(symbol - 1)];
      if (available == 0) continue;
      --available;
      prefix.push_back(symbol);
      self(self, level + 1);
      prefix.pop_back();
      ++available;
    }
  };
  expand(expand, 0);

  std::vector<DistributionTable> partial(shards.size(), DistributionTable{spec, {}});
  std::vector<std::uint64_t> visits(shards.size(), 0);

#pragma omp parallel for schedule(dynamic)
  for (long s = 0; s < static_cast<long>(shards.size()); ++s) {
    const Shard& shard = shards[static_cast<size_t>(s)];
    std::vector<int> seq = shard.prefix;
    for (int symbol = 1; symbol <= spec.k(); ++symbol) {
      seq.insert(seq.end(), static_cast<size_t>(shard.remaining[static_cast<size_t>(symbol - 1)]),
                 symbol);
    }
    visits[static_cast<size_t>(s)] =
        enumerate_suffix(seq, static_cast<size_t>(depth), spec.k(), partial[static_cast<size_t>(s)]);
  }

  DistributionTable table{spec, {}};
  std::uint64_t visited = 0;
  for (size_t s = 0; s < shards.size(); ++s) {
    table.merge(partial[s]);
    visited += visits[s];
  }
  if (BigInt(visited) != spec.multinomial()) {
    throw FormulaIntegrityError("enumerate_stats: visit count != multinomial");
  }
  return table;
#endif
}

}  // namespace runstat
