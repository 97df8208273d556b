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

#ifndef RUNSTAT_ALGEBRA_HPP
#define RUNSTAT_ALGEBRA_HPP

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "runstat/bigint.hpp"
#include "runstat/errors.hpp"

namespace runstat {

// Fixed variable layout for a system of k symbols:
//   index 0..3            -> w (rises), u (falls), v (levels), t (total runs)
//   index 4 .. 4+k-1      -> t_1..t_k (runs of symbol i)
//   index 4+k .. 4+2k-1   -> x_1..x_k (occurrences of symbol i)
// Only the x variables carry truncation caps; x_i powers above cap(i) are
// dropped eagerly by every operation, so all series are finite.
class VarContext {
 public:
  static constexpr int kW = 0;
  static constexpr int kU = 1;
  static constexpr int kV = 2;
  static constexpr int kT = 3;

  VarContext(int k, std::vector<int> x_caps);

  int k() const { return k_; }
  int num_vars() const { return 4 + 2 * k_; }

  // Symbol indices are 1-based throughout, matching the usual notation.
  int t_index(int symbol) const;
  int x_index(int symbol) const;
  int x_cap(int symbol) const;
  int cap_total() const { return cap_total_; }

  std::string var_name(int var) const;

  bool operator==(const VarContext& other) const {
    return k_ == other.k_ && x_caps_ == other.x_caps_;
  }

 private:
  int k_;
  std::vector<int> x_caps_;
  int cap_total_;
};

using VarContextPtr = std::shared_ptr<const VarContext>;

// Exponent vector, length VarContext::num_vars(), indexed per the layout above.
struct Monomial {
  std::vector<int> exps;

  int degree() const;
  int exp(int var) const { return exps[static_cast<size_t>(var)]; }
  bool operator==(const Monomial&) const = default;
};

// Canonical term order: graded lexicographic over the fixed variable order.
// Lower total degree first, ties broken by the exponent vector ascending.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over BigInt in a shared VarContext.
// Invariants: no stored coefficient is zero; every stored monomial respects
// the x caps. Immutable after construction; safe to read concurrently.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, GradedLexLess>;

  explicit Polynomial(VarContextPtr ctx);

  static Polynomial constant(VarContextPtr ctx, BigInt c);
  static Polynomial variable(VarContextPtr ctx, int var, int power = 1);

  const VarContext& ctx() const { return *ctx_; }
  const VarContextPtr& ctx_ptr() const { return ctx_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  BigInt coeff(const Monomial& m) const;

  // Building block for all operations: accumulates c on m, drops over-cap
  // monomials, erases terms that cancel to zero.
  void add_term(const Monomial& m, const BigInt& c);

  // Equal iff same context value and same term map.
  bool operator==(const Polynomial& other) const;

  // Canonical text form: graded-lex ascending, terms joined by " + ",
  // zero exponents and unit coefficient magnitudes elided, e.g.
  // "u + w + 3*w*u + 2*w*u^2 + 2*w^2*u + w^2*u^2".
  std::string to_string() const;

  // Sum of x-variable exponents of m under this context.
  int x_degree(const Monomial& m) const;

 private:
  VarContextPtr ctx_;
  TermMap terms_;
};

// Termwise sum. Throws ContextMismatchError for distinct contexts.
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);

// Distributed product in the truncated ring: product monomials whose x part
// exceeds any cap are discarded. Dispatches to the OpenMP kernel for large
// inputs; both kernels produce identical term maps.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul_serial(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul_parallel(const Polynomial& a, const Polynomial& b);

// Exact inverse of a unit series in the truncated ring: d must have constant
// term 1 (else NotAUnitError) and every other term must carry a positive
// x-degree (else DivergenceError). poly_mul(d, result) == 1.
Polynomial poly_inv_unit(const Polynomial& d);

// Coefficient of x_1^{p_1}...x_k^{p_k}: the polynomial in the remaining
// variables multiplying that x-monomial. Absent coefficient -> zero.
// x_pattern must fix every x exponent (size k).
Polynomial coeff_extract(const Polynomial& p, std::span<const int> x_pattern);

enum class LinearFactor { kUMinusW };

// Exact quotient p / (u - w), long division in u over the remaining-variable
// coefficient ring. Throws DivisibilityError when the remainder is nonzero,
// which signals a broken identity upstream.
Polynomial poly_exact_div_linear(const Polynomial& p, LinearFactor which);

// Substitution by exponent folding on the term map.
Polynomial poly_set_var_one(const Polynomial& p, int var);       // var := 1
Polynomial poly_fold_var(const Polynomial& p, int src, int dst); // src := dst

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return poly_add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return poly_sub(a, b); }
inline Polynomial operator-(const Polynomial& a) { return poly_neg(a); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

}  // namespace runstat

#endif  // RUNSTAT_ALGEBRA_HPP
