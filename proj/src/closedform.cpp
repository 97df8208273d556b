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

#include "runstat/closedform.hpp"

#include <stdexcept>

#include "runstat/errors.hpp"

namespace runstat {

BigInt binom_gen(long long a, long long b) {
  if (b < 0) return 0;
  BigInt c = 1;
  // Stepwise product stays integral: after step i the value is binom(a, i+1).
  for (long long i = 0; i < b; ++i) {
    c *= (a - i);
    c /= (i + 1);
  }
  return c;
}

namespace {

inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

BigRational f_term(int n, long long m, int d, int t) {
  if (d == 0) {
    BigInt value = binom_gen(n - 1, t - 1) * binom_gen(m + t - 1, t) * parity_sign(t);
    return BigRational(value);
  }
  BigInt numerator = m * binom_gen(n - 1, d + t - 1) * binom_gen(m + t - 1, d + t - 1) *
                     binom_gen(d + t - 1, t) * parity_sign(t);
  return BigRational(numerator) / d;
}

BigInt h_term(int n, int j, long long m, int d, int t) {
  return binom_gen(j, d) * binom_gen(n - j, t) * binom_gen(m, j) *
         binom_gen(n - j + m - 1, n - j) * parity_sign(static_cast<long long>(j) + d + t);
}

std::optional<bool> wz_certificate_check(int n, int j, long long m, int d, int t) {
  const long long den0 = n - t + 1 - j;        // pole of G(n, j)
  const long long den1 = n - t - j;            // pole of G(n, j+1)
  if (den0 == 0 || den1 == 0) return std::nullopt;

  auto certificate = [&](int jj, long long den) {
    return BigRational(h_term(n, jj, m, d, t) * (d - jj) * (n + m - jj)) / den;
  };
  const BigRational lhs(BigInt(n - d - t + 1) * h_term(n + 1, j, m, d, t) -
                        BigInt(n) * h_term(n, j, m, d, t));
  return lhs == certificate(j + 1, den1) - certificate(j, den0);
}

bool f_recurrence_check(int n, long long m, int d, int t) {
  const BigRational lhs = BigRational(n - d - t + 1) * f_term(n + 1, m, d, t);
  const BigRational rhs = BigRational(n) * f_term(n, m, d, t);
  return lhs == rhs;
}

void validate(const RiseFallQuery& query) {
  if (query.rises < 0 || query.falls < 0) {
    throw std::invalid_argument("rise/fall counts must be non-negative");
  }
  if (query.rises + query.falls > query.spec.total() - 1) {
    throw std::invalid_argument("r + s must be at most n - 1");
  }
}

namespace {

// Enumerates all vectors 0 <= c_i <= bounds[i] with sum == target, pruning
// branches whose remaining capacity cannot reach the target.
template <typename Fn>
void for_each_bounded_split(const std::vector<int>& bounds, int target, std::vector<int>& scratch,
                            size_t index, int remaining_capacity, const Fn& fn) {
  if (index == bounds.size()) {
    if (target == 0) fn(scratch);
    return;
  }
  const int bound = bounds[index];
  const int rest_capacity = remaining_capacity - bound;
  for (int c = 0; c <= bound && c <= target; ++c) {
    if (target - c > rest_capacity) continue;  // tail cannot absorb the rest
    scratch[index] = c;
    for_each_bounded_split(bounds, target - c, scratch, index + 1, rest_capacity, fn);
  }
}

template <typename Fn>
void for_each_bounded_split(const std::vector<int>& bounds, int target, const Fn& fn) {
  if (target < 0) return;
  std::vector<int> scratch(bounds.size(), 0);
  int capacity = 0;
  for (int b : bounds) capacity += b;
  for_each_bounded_split(bounds, target, scratch, 0, capacity, fn);
}

}  // namespace

BigInt count_rises_falls_custom(const RiseFallQuery& query, const FTermFn& f) {
  validate(query);
  const auto& counts = query.spec.counts();
  const int k = query.spec.k();
  const int r = query.rises;
  const int s = query.falls;

  BigRational total = 0;
  // The split sums run over d + tau = r + s + 1 with tau <= r, so d >= 1.
  for (int tau = 0; tau <= r; ++tau) {
    const int d = r + s + 1 - tau;
    for_each_bounded_split(counts, d, [&](const std::vector<int>& d_vec) {
      for_each_bounded_split(counts, tau, [&](const std::vector<int>& tau_vec) {
        BigRational upper = 1;
        for (int i = 0; i < k && upper != 0; ++i) {
          upper *= f(counts[static_cast<size_t>(i)], r - tau + 1, d_vec[static_cast<size_t>(i)],
                     tau_vec[static_cast<size_t>(i)]);
        }
        BigRational lower = 1;
        for (int i = 0; i < k && lower != 0; ++i) {
          lower *= f(counts[static_cast<size_t>(i)], r - tau, d_vec[static_cast<size_t>(i)],
                     tau_vec[static_cast<size_t>(i)]);
        }
        total += upper - lower;
      });
    });
  }

  if (!is_integral(total)) {
    throw FormulaIntegrityError("count_rises_falls: non-integral total for spec " +
                                query.spec.to_string());
  }
  return boost::multiprecision::numerator(total);
}

BigInt count_rises_falls(const RiseFallQuery& query) {
  return count_rises_falls_custom(query, [](int n, long long m, int d, int t) {
    return f_term(n, m, d, t);
  });
}

BigInt newcomb(const Specification& spec, int r) {
  if (r < 0 || r > spec.total() - 1) {
    throw std::invalid_argument("newcomb: r must satisfy 0 <= r <= n - 1");
  }
  const int n = spec.total();
  BigInt total = 0;
  for (int j = 0; j <= r; ++j) {
    BigInt term = binom_gen(n + 1, j);
    for (int ni : spec.counts()) term *= binom_gen(ni + r - j, ni);
    total += parity_sign(j) * term;
  }
  return total;
}

BigInt eulerian(int k, int r) {
  if (k < 1) throw std::invalid_argument("eulerian: k must be >= 1");
  return newcomb(Specification(std::vector<int>(static_cast<size_t>(k), 1)), r);
}

std::vector<BigInt> eulerian_row(int k) {
  if (k < 1) throw std::invalid_argument("eulerian: k must be >= 1");
  std::vector<BigInt> row;
  row.reserve(static_cast<size_t>(k));
  for (int r = 0; r < k; ++r) row.push_back(eulerian(k, r));
  return row;
}

}  // namespace runstat
