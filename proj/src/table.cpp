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

#include "runstat/table.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

namespace runstat {

namespace {

using EntryKey = std::tuple<int, int, int, int, std::vector<int>>;

EntryKey key_of(const OutputEntry& e) { return {e.r, e.s, e.l, e.b, e.b_per}; }

std::vector<OutputEntry> to_sorted_entries(const std::map<EntryKey, BigInt>& grouped) {
  std::vector<OutputEntry> entries;
  entries.reserve(grouped.size());
  for (const auto& [key, count] : grouped) {
    const auto& [r, s, l, b, b_per] = key;
    entries.push_back({r, s, l, b, b_per, count});
  }
  return entries;  // std::map iteration is already the required order
}

}  // namespace

OutputRecord record_from_polynomial(const Specification& spec, TrackerMode mode,
                                    const Polynomial& coefficient, std::string provenance) {
  const int n = spec.total();
  const VarContext& ctx = coefficient.ctx();
  std::map<EntryKey, BigInt> grouped;
  for (const auto& [m, c] : coefficient.terms()) {
    OutputEntry e;
    e.r = m.exp(VarContext::kW);
    e.s = m.exp(VarContext::kU);
    switch (mode) {
      case TrackerMode::kRS:
        // l and b are forced by the relations r+s+1 = b and b+l = n.
        e.b = e.r + e.s + 1;
        e.l = n - e.b;
        break;
      case TrackerMode::kRSTotalRuns:
        e.b = m.exp(VarContext::kT);
        e.l = n - e.b;
        break;
      case TrackerMode::kRSLTotalRuns:
        e.l = m.exp(VarContext::kV);
        e.b = m.exp(VarContext::kT);
        break;
      case TrackerMode::kRSLPerRuns: {
        e.l = m.exp(VarContext::kV);
        e.b_per.resize(static_cast<size_t>(ctx.k()));
        for (int i = 1; i <= ctx.k(); ++i) {
          e.b_per[static_cast<size_t>(i - 1)] = m.exp(ctx.t_index(i));
          e.b += e.b_per[static_cast<size_t>(i - 1)];
        }
        break;
      }
    }
    grouped[key_of(e)] += c;
  }
  return {spec, mode, std::move(provenance), to_sorted_entries(grouped)};
}

OutputRecord record_from_oracle(const Specification& spec, TrackerMode mode,
                                const DistributionTable& table) {
  std::map<EntryKey, BigInt> grouped;
  for (const auto& [profile, count] : table.entries) {
    OutputEntry e;
    e.r = profile.rises;
    e.s = profile.falls;
    e.l = profile.levels;
    e.b = profile.runs;
    if (mode == TrackerMode::kRSLPerRuns) e.b_per = profile.runs_per;
    grouped[key_of(e)] += count;
  }
  return {spec, mode, "oracle", to_sorted_entries(grouped)};
}

std::string record_to_json(const OutputRecord& record) {
  nlohmann::json j;
  j["spec"] = record.spec.counts();
  j["mode"] = to_string(record.mode);
  j["provenance"] = record.provenance;
  j["entries"] = nlohmann::json::array();
  for (const OutputEntry& e : record.entries) {
    j["entries"].push_back({{"r", e.r},
                            {"s", e.s},
                            {"l", e.l},
                            {"b", e.b},
                            {"b_per", e.b_per},
                            {"count", to_decimal_string(e.count)}});
  }
  return j.dump(2);
}

OutputRecord record_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  auto mode = parse_tracker_mode(j.at("mode").get<std::string>());
  if (!mode) throw std::invalid_argument("record_from_json: unknown mode");
  OutputRecord record{Specification(j.at("spec").get<std::vector<int>>()), *mode,
                      j.at("provenance").get<std::string>(), {}};
  for (const auto& je : j.at("entries")) {
    OutputEntry e;
    e.r = je.at("r").get<int>();
    e.s = je.at("s").get<int>();
    e.l = je.at("l").get<int>();
    e.b = je.at("b").get<int>();
    e.b_per = je.at("b_per").get<std::vector<int>>();
    e.count = BigInt(je.at("count").get<std::string>());
    record.entries.push_back(std::move(e));
  }
  return record;
}

std::string record_to_csv(const OutputRecord& record) {
  std::ostringstream out;
  out << "r,s,l,b,b_per,count\n";
  for (const OutputEntry& e : record.entries) {
    out << e.r << "," << e.s << "," << e.l << "," << e.b << ",";
    for (size_t i = 0; i < e.b_per.size(); ++i) {
      if (i) out << "|";
      out << e.b_per[i];
    }
    out << "," << to_decimal_string(e.count) << "\n";
  }
  return out.str();
}

}  // namespace runstat
