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

#ifndef RUNSTAT_BIGINT_HPP
#define RUNSTAT_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace runstat {

// Counts grow factorially; every public count is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Normalized rational (denominator > 0, gcd-reduced). Only the closed-form
// module produces rationals; polynomial coefficients stay integer.
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal_string(const BigInt& v) { return v.str(); }

inline bool is_integral(const BigRational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

}  // namespace runstat

#endif  // RUNSTAT_BIGINT_HPP
