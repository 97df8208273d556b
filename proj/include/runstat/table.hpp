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

#ifndef RUNSTAT_TABLE_HPP
#define RUNSTAT_TABLE_HPP

#include <string>
#include <vector>

#include "runstat/algebra.hpp"
#include "runstat/genfun.hpp"
#include "runstat/oracle.hpp"

namespace runstat {

// One serialized outcome class. Counts travel as decimal strings so no JSON
// parser can lose precision. l and b are always populated (they are forced by
// the linear relations even when the mode does not track them); b_per is
// empty except in per-symbol-runs mode.
struct OutputEntry {
  int r = 0;
  int s = 0;
  int l = 0;
  int b = 0;
  std::vector<int> b_per;
  BigInt count;

  bool operator==(const OutputEntry&) const = default;
};

struct OutputRecord {
  Specification spec;
  TrackerMode mode = TrackerMode::kRS;
  std::string provenance;  // recursive | matrix | closed-form | oracle
  std::vector<OutputEntry> entries;  // sorted by (r, s, l, b, b_per) ascending

  bool operator==(const OutputRecord&) const = default;
};

// Builds a record from the extracted coefficient polynomial of a generating
// function (x exponents already stripped).
OutputRecord record_from_polynomial(const Specification& spec, TrackerMode mode,
                                    const Polynomial& coefficient, std::string provenance);

// Builds a record from a brute-force table, marginalizing onto the statistics
// the mode tracks.
OutputRecord record_from_oracle(const Specification& spec, TrackerMode mode,
                                const DistributionTable& table);

// JSON schema:
// {"spec": [2,3], "mode": "rslB", "provenance": "oracle",
//  "entries": [{"r":0,"s":1,"l":3,"b":2,"b_per":[1,1],"count":"1"}, ...]}
std::string record_to_json(const OutputRecord& record);
OutputRecord record_from_json(const std::string& text);

// Same columns, one line per entry; b_per packed as "1|2" (empty when
// untracked).
std::string record_to_csv(const OutputRecord& record);

}  // namespace runstat

#endif  // RUNSTAT_TABLE_HPP
