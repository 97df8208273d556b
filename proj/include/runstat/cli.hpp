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

#ifndef RUNSTAT_CLI_HPP
#define RUNSTAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace runstat {

// Exit-code contract, fixed so CI can gate on it:
//   0 success, 1 verification failure, 2 usage/parse error, 3 resource bound.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceBound = 3;

// Runs one CLI invocation. args excludes the program name. The enumeration
// ceiling honors the RUNSTAT_ORACLE_BOUND environment variable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace runstat

#endif  // RUNSTAT_CLI_HPP
