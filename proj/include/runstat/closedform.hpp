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

#ifndef RUNSTAT_CLOSEDFORM_HPP
#define RUNSTAT_CLOSEDFORM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "runstat/bigint.hpp"
#include "runstat/genfun.hpp"

namespace runstat {

// Generalized binomial coefficient for any integer a:
//   0 when b < 0, otherwise a(a-1)...(a-b+1)/b!.
// In particular binom_gen(-1, 0) == 1; the convention every formula below
// relies on.
BigInt binom_gen(long long a, long long b);

// The two-branch coefficient function of the rises/falls closed form:
//   d = 0:  C(n-1, t-1) C(m+t-1, t) (-1)^t
//   d != 0: (m/d) C(n-1, d+t-1) C(m+t-1, d+t-1) C(d+t-1, t) (-1)^t
// The m/d factor forces exact rational arithmetic.
BigRational f_term(int n, long long m, int d, int t);

// Hypergeometric summand whose j-sum equals f_term:
//   C(j,d) C(n-j,t) C(m,j) C(n-j+m-1, n-j) (-1)^{j+d+t}.
BigInt h_term(int n, int j, long long m, int d, int t);

// Telescoping certificate companion of h. Checks
//   (n-d-t+1) h(n+1,j,m,d,t) - n h(n,j,m,d,t) == G(n,j+1) - G(n,j)
// with G(n,j) = h(n,j,m,d,t) (d-j)(n+m-j) / (n-t+1-j), exactly in rationals.
// Returns nullopt when either endpoint sits on a certificate pole
// (zero denominator); such points are skipped, not judged.
std::optional<bool> wz_certificate_check(int n, int j, long long m, int d, int t);

// The first-order recurrence satisfied by f:
//   (n-d-t+1) f(n+1,m,d,t) - n f(n,m,d,t) == 0.
bool f_recurrence_check(int n, long long m, int d, int t);

// Query for the count of sequences with exactly r rises and s falls.
struct RiseFallQuery {
  Specification spec;
  int rises = 0;
  int falls = 0;
};

// Throws std::invalid_argument unless 0 <= r, 0 <= s, r + s <= n - 1.
void validate(const RiseFallQuery& query);

// Joint rises/falls count by the closed form: a double sum of f-products over
// split vectors (d_1..d_k), (tau_1..tau_k) with d_i, tau_i <= n_i constrained
// by d + tau = r + s + 1 and tau <= r. Terms are rational; the grand total is
// asserted integral (FormulaIntegrityError otherwise, which must never fire).
BigInt count_rises_falls(const RiseFallQuery& query);

// Same sum with a caller-supplied replacement for f_term; exists so broken
// variants can be injected and shown to fail verification.
using FTermFn = std::function<BigRational(int n, long long m, int d, int t)>;
BigInt count_rises_falls_custom(const RiseFallQuery& query, const FTermFn& f);

// Rise-count distribution for arbitrary specification:
//   A(n; r) = sum_{j=0..r} (-1)^j C(n+1, j) prod_i C(n_i + r - j, n_i).
// Requires 0 <= r <= n - 1.
BigInt newcomb(const Specification& spec, int r);

// Eulerian number A(k, r): newcomb with specification [1,...,1].
BigInt eulerian(int k, int r);
std::vector<BigInt> eulerian_row(int k);

}  // namespace runstat

#endif  // RUNSTAT_CLOSEDFORM_HPP
