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

#include "runstat/algebra.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace runstat {

namespace {

void require_same_context(const Polynomial& a, const Polynomial& b) {
  if (!(a.ctx() == b.ctx())) {
    throw ContextMismatchError("polynomials belong to different variable contexts");
  }
}

}  // namespace

VarContext::VarContext(int k, std::vector<int> x_caps) : k_(k), x_caps_(std::move(x_caps)) {
  if (k_ < 1) throw std::invalid_argument("VarContext: k must be >= 1");
  if (static_cast<int>(x_caps_.size()) != k_) {
    throw std::invalid_argument("VarContext: need one x cap per symbol");
  }
  for (int c : x_caps_) {
    if (c < 1) throw std::invalid_argument("VarContext: x caps must be >= 1");
  }
  cap_total_ = std::accumulate(x_caps_.begin(), x_caps_.end(), 0);
}

int VarContext::t_index(int symbol) const {
  if (symbol < 1 || symbol > k_) throw std::out_of_range("VarContext: symbol out of range");
  return 4 + (symbol - 1);
}

int VarContext::x_index(int symbol) const {
  if (symbol < 1 || symbol > k_) throw std::out_of_range("VarContext: symbol out of range");
  return 4 + k_ + (symbol - 1);
}

int VarContext::x_cap(int symbol) const {
  if (symbol < 1 || symbol > k_) throw std::out_of_range("VarContext: symbol out of range");
  return x_caps_[static_cast<size_t>(symbol - 1)];
}

std::string VarContext::var_name(int var) const {
  switch (var) {
    case kW: return "w";
    case kU: return "u";
    case kV: return "v";
    case kT: return "t";
    default: break;
  }
  if (var >= 4 && var < 4 + k_) return "t" + std::to_string(var - 4 + 1);
  if (var >= 4 + k_ && var < num_vars()) return "x" + std::to_string(var - 4 - k_ + 1);
  throw std::out_of_range("VarContext: variable index out of range");
}

int Monomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.exps < b.exps;
}

Polynomial::Polynomial(VarContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("Polynomial: null context");
}

Polynomial Polynomial::constant(VarContextPtr ctx, BigInt c) {
  Polynomial p(std::move(ctx));
  if (c != 0) {
    p.terms_.emplace(Monomial{std::vector<int>(static_cast<size_t>(p.ctx().num_vars()), 0)},
                     std::move(c));
  }
  return p;
}

Polynomial Polynomial::variable(VarContextPtr ctx, int var, int power) {
  Polynomial p(std::move(ctx));
  if (var < 0 || var >= p.ctx().num_vars()) {
    throw std::out_of_range("Polynomial::variable: index out of range");
  }
  if (power < 0) throw std::invalid_argument("Polynomial::variable: negative power");
  if (power == 0) return constant(p.ctx_ptr(), 1);
  Monomial m{std::vector<int>(static_cast<size_t>(p.ctx().num_vars()), 0)};
  m.exps[static_cast<size_t>(var)] = power;
  p.add_term(m, 1);  // above-cap x power collapses to the zero polynomial
  return p;
}

bool Polynomial::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [m, c] = *terms_.begin();
  return c == 1 && m.degree() == 0;
}

BigInt Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Polynomial::x_degree(const Monomial& m) const {
  int d = 0;
  for (int i = 1; i <= ctx_->k(); ++i) d += m.exp(ctx_->x_index(i));
  return d;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  for (int i = 1; i <= ctx_->k(); ++i) {
    if (m.exp(ctx_->x_index(i)) > ctx_->x_cap(i)) return;  // truncated ring: drop
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::operator==(const Polynomial& other) const {
  return *ctx_ == *other.ctx_ && terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string factors;
    for (int var = 0; var < ctx_->num_vars(); ++var) {
      const int e = m.exp(var);
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += ctx_->var_name(var);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out << c.str();
    } else if (c == 1) {
      out << factors;
    } else if (c == -1) {
      out << "-" << factors;
    } else {
      out << c.str() << "*" << factors;
    }
  }
  return out.str();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b);
  Polynomial out(a.ctx_ptr());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b);
  Polynomial out(a.ctx_ptr());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
  return out;
}

Polynomial poly_neg(const Polynomial& a) {
  Polynomial out(a.ctx_ptr());
  for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
  return out;
}

namespace {

// Shared inner step of both multiply kernels.
inline void accumulate_product(Polynomial& out, const Monomial& ma, const BigInt& ca,
                               const Monomial& mb, const BigInt& cb) {
  Monomial m{std::vector<int>(ma.exps.size())};
  for (size_t i = 0; i < ma.exps.size(); ++i) m.exps[i] = ma.exps[i] + mb.exps[i];
  out.add_term(m, ca * cb);
}

constexpr size_t kParallelPairCutoff = 1 << 14;

}  // namespace

Polynomial poly_mul_serial(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b);
  Polynomial out(a.ctx_ptr());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      accumulate_product(out, ma, ca, mb, cb);
    }
  }
  return out;
}

Polynomial poly_mul_parallel(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b);
#ifndef _OPENMP
  return poly_mul_serial(a, b);
#else
  std::vector<const std::pair<const Monomial, BigInt>*> at;
  at.reserve(a.terms().size());
  for (const auto& term : a.terms()) at.push_back(&term);

  const int nthreads = omp_get_max_threads();
  std::vector<Polynomial> partial(static_cast<size_t>(nthreads), Polynomial(a.ctx_ptr()));

#pragma omp parallel num_threads(nthreads)
  {
    Polynomial& local = partial[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long i = 0; i < static_cast<long>(at.size()); ++i) {
      const auto& [ma, ca] = *at[static_cast<size_t>(i)];
      for (const auto& [mb, cb] : b.terms()) {
        accumulate_product(local, ma, ca, mb, cb);
      }
    }
  }

  // Exact integer addition is associative, so the merge order cannot change
  // the result; merging serially keeps the code simple.
  Polynomial out(a.ctx_ptr());
  for (const Polynomial& part : partial) {
    for (const auto& [m, c] : part.terms()) out.add_term(m, c);
  }
  return out;
#endif
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
#ifdef _OPENMP
  const size_t pairs = a.terms().size() * b.terms().size();
  if (pairs >= kParallelPairCutoff && omp_get_max_threads() > 1 && !omp_in_parallel()) {
    return poly_mul_parallel(a, b);
  }
#endif
  return poly_mul_serial(a, b);
}

Polynomial poly_inv_unit(const Polynomial& d) {
  const auto& ctx = d.ctx_ptr();
  const Monomial one_mono{std::vector<int>(static_cast<size_t>(d.ctx().num_vars()), 0)};
  if (d.coeff(one_mono) != 1) {
    throw NotAUnitError("poly_inv_unit: constant term must be exactly 1");
  }
  for (const auto& [m, c] : d.terms()) {
    if (m.degree() == 0) continue;
    if (d.x_degree(m) == 0) {
      throw DivergenceError("poly_inv_unit: term without x-part would not truncate");
    }
  }
  // Neumann sum of e = 1 - d. Each factor of e raises the minimum x-degree,
  // so powers vanish after at most cap_total() steps.
  const Polynomial one = Polynomial::constant(ctx, 1);
  Polynomial e = poly_sub(one, d);
  Polynomial acc = one;
  Polynomial pw = e;
  while (!pw.is_zero()) {
    acc = poly_add(acc, pw);
    pw = poly_mul(pw, e);
  }
  return acc;
}

Polynomial coeff_extract(const Polynomial& p, std::span<const int> x_pattern) {
  const int k = p.ctx().k();
  if (static_cast<int>(x_pattern.size()) != k) {
    throw std::invalid_argument("coeff_extract: pattern must fix every x exponent");
  }
  Polynomial out(p.ctx_ptr());
  for (const auto& [m, c] : p.terms()) {
    bool match = true;
    for (int i = 1; i <= k; ++i) {
      if (m.exp(p.ctx().x_index(i)) != x_pattern[static_cast<size_t>(i - 1)]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    Monomial stripped = m;
    for (int i = 1; i <= k; ++i) stripped.exps[static_cast<size_t>(p.ctx().x_index(i))] = 0;
    out.add_term(stripped, c);
  }
  return out;
}

Polynomial poly_exact_div_linear(const Polynomial& p, LinearFactor which) {
  if (which != LinearFactor::kUMinusW) {
    throw std::invalid_argument("poly_exact_div_linear: unsupported factor");
  }
  const auto& ctx = p.ctx_ptr();
  if (p.is_zero()) return Polynomial(ctx);

  // Regroup p by u-exponent; parts[d] holds the coefficient (u stripped).
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) {
    const int du = m.exp(VarContext::kU);
    Monomial stripped = m;
    stripped.exps[VarContext::kU] = 0;
    auto [it, ins] = parts.try_emplace(du, Polynomial(ctx));
    it->second.add_term(stripped, c);
  }
  const int max_deg = parts.rbegin()->first;
  if (max_deg == 0) {
    throw DivisibilityError("poly_exact_div_linear: no u term to divide");
  }

  const Polynomial w = Polynomial::variable(ctx, VarContext::kW);
  auto part_at = [&](int d) {
    auto it = parts.find(d);
    return it == parts.end() ? Polynomial(ctx) : it->second;
  };

  // p = (u - w) q + r: q_{D-1} = p_D, q_{d-1} = p_d + w q_d, r = p_0 + w q_0.
  std::vector<Polynomial> q(static_cast<size_t>(max_deg), Polynomial(ctx));
  q[static_cast<size_t>(max_deg - 1)] = part_at(max_deg);
  for (int d = max_deg - 1; d >= 1; --d) {
    q[static_cast<size_t>(d - 1)] =
        poly_add(part_at(d), poly_mul(w, q[static_cast<size_t>(d)]));
  }
  const Polynomial rem = poly_add(part_at(0), poly_mul(w, q[0]));
  if (!rem.is_zero()) {
    throw DivisibilityError("poly_exact_div_linear: remainder is nonzero");
  }

  Polynomial out(ctx);
  for (int d = 0; d < max_deg; ++d) {
    for (const auto& [m, c] : q[static_cast<size_t>(d)].terms()) {
      Monomial shifted = m;
      shifted.exps[VarContext::kU] += d;
      out.add_term(shifted, c);
    }
  }
  return out;
}

Polynomial poly_set_var_one(const Polynomial& p, int var) {
  if (var < 0 || var >= p.ctx().num_vars()) {
    throw std::out_of_range("poly_set_var_one: variable index out of range");
  }
  Polynomial out(p.ctx_ptr());
  for (const auto& [m, c] : p.terms()) {
    Monomial folded = m;
    folded.exps[static_cast<size_t>(var)] = 0;
    out.add_term(folded, c);
  }
  return out;
}

Polynomial poly_fold_var(const Polynomial& p, int src, int dst) {
  const int nv = p.ctx().num_vars();
  if (src < 0 || src >= nv || dst < 0 || dst >= nv || src == dst) {
    throw std::out_of_range("poly_fold_var: bad variable indices");
  }
  Polynomial out(p.ctx_ptr());
  for (const auto& [m, c] : p.terms()) {
    Monomial folded = m;
    folded.exps[static_cast<size_t>(dst)] += folded.exps[static_cast<size_t>(src)];
    folded.exps[static_cast<size_t>(src)] = 0;
    out.add_term(folded, c);
  }
  return out;
}

}  // namespace runstat
