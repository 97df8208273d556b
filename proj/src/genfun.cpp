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

#include "runstat/genfun.hpp"

#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

namespace runstat {

Specification::Specification(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("Specification: k must be >= 1");
  for (int c : counts_) {
    if (c < 1) throw std::invalid_argument("Specification: every n_i must be >= 1");
  }
  total_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

BigInt Specification::multinomial() const {
  BigInt result = 1;
  int placed = 0;
  // prod over symbols of C(placed + n_i, n_i), built by exact division
  for (int ni : counts_) {
    for (int j = 1; j <= ni; ++j) {
      ++placed;
      result = result * placed / j;
    }
  }
  return result;
}

std::optional<Specification> Specification::parse(std::string_view text) {
  std::vector<int> counts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                             : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || value < 1) {
      return std::nullopt;
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (counts.empty()) return std::nullopt;
  return Specification(std::move(counts));
}

std::string Specification::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < counts_.size(); ++i) {
    if (i) out << ",";
    out << counts_[i];
  }
  return out.str();
}

std::optional<TrackerMode> parse_tracker_mode(std::string_view text) {
  if (text == "rs") return TrackerMode::kRS;
  if (text == "rsb") return TrackerMode::kRSTotalRuns;
  if (text == "rslb") return TrackerMode::kRSLTotalRuns;
  if (text == "rslB") return TrackerMode::kRSLPerRuns;
  return std::nullopt;
}

std::string to_string(TrackerMode mode) {
  switch (mode) {
    case TrackerMode::kRS: return "rs";
    case TrackerMode::kRSTotalRuns: return "rsb";
    case TrackerMode::kRSLTotalRuns: return "rslb";
    case TrackerMode::kRSLPerRuns: return "rslB";
  }
  return "?";
}

VarContextPtr make_var_context(const Specification& spec) {
  return std::make_shared<const VarContext>(spec.k(), spec.counts());
}

Polynomial build_g(int symbol, const Specification& spec, TrackerMode mode,
                   const VarContextPtr& ctx) {
  if (symbol < 1 || symbol > spec.k()) {
    throw std::out_of_range("build_g: symbol index out of range");
  }
  Polynomial g(ctx);
  const int ni = spec.count(symbol);
  for (int j = 1; j <= ni; ++j) {
    Monomial m{std::vector<int>(static_cast<size_t>(ctx->num_vars()), 0)};
    m.exps[static_cast<size_t>(ctx->x_index(symbol))] = j;
    switch (mode) {
      case TrackerMode::kRS:
        break;
      case TrackerMode::kRSTotalRuns:
        m.exps[VarContext::kT] = 1;
        break;
      case TrackerMode::kRSLTotalRuns:
        m.exps[VarContext::kT] = 1;
        m.exps[VarContext::kV] = j - 1;
        break;
      case TrackerMode::kRSLPerRuns:
        m.exps[static_cast<size_t>(ctx->t_index(symbol))] = 1;
        m.exps[VarContext::kV] = j - 1;
        break;
    }
    g.add_term(m, 1);
  }
  return g;
}

Polynomial gf_recursive(const Specification& spec, TrackerMode mode) {
  const VarContextPtr ctx = make_var_context(spec);
  const Polynomial one = Polynomial::constant(ctx, 1);
  const Polynomial w = Polynomial::variable(ctx, VarContext::kW);
  const Polynomial u = Polynomial::variable(ctx, VarContext::kU);

  Polynomial g_total = build_g(1, spec, mode, ctx);
  for (int j = 2; j <= spec.k(); ++j) {
    const Polynomial gj = build_g(j, spec, mode, ctx);
    const Polynomial num = gj * (one + w * g_total) * (one + u * g_total);
    const Polynomial den = one - w * u * gj * g_total;
    g_total = g_total + num * poly_inv_unit(den);
  }
  return g_total;
}

Polynomial gf_matrix(const Specification& spec, TrackerMode mode) {
  const int k = spec.k();
  const VarContextPtr ctx = make_var_context(spec);
  const Polynomial w = Polynomial::variable(ctx, VarContext::kW);
  const Polynomial u = Polynomial::variable(ctx, VarContext::kU);

  std::vector<Polynomial> g;
  g.reserve(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) g.push_back(build_g(i, spec, mode, ctx));

  // Neumann iteration y, Ny, N^2 y, ...; every entry of N has positive
  // x-degree so the vectors vanish after at most n steps.
  std::vector<Polynomial> vec = g;
  Polynomial total(ctx);
  for (const Polynomial& comp : vec) total = total + comp;

  const int max_iters = ctx->cap_total() + 1;
  for (int iter = 0; iter < max_iters; ++iter) {
    // prefix[i] = sum_{j<i} vec[j], suffix[i] = sum_{j>i} vec[j]
    std::vector<Polynomial> prefix(static_cast<size_t>(k), Polynomial(ctx));
    for (int i = 1; i < k; ++i) {
      prefix[static_cast<size_t>(i)] = prefix[static_cast<size_t>(i - 1)] + vec[static_cast<size_t>(i - 1)];
    }
    std::vector<Polynomial> suffix(static_cast<size_t>(k), Polynomial(ctx));
    for (int i = k - 2; i >= 0; --i) {
      suffix[static_cast<size_t>(i)] = suffix[static_cast<size_t>(i + 1)] + vec[static_cast<size_t>(i + 1)];
    }

    std::vector<Polynomial> next;
    next.reserve(static_cast<size_t>(k));
    bool all_zero = true;
    for (int i = 0; i < k; ++i) {
      Polynomial comp = g[static_cast<size_t>(i)] *
                        (u * prefix[static_cast<size_t>(i)] + w * suffix[static_cast<size_t>(i)]);
      if (!comp.is_zero()) all_zero = false;
      next.push_back(std::move(comp));
    }
    if (all_zero) return total;
    for (const Polynomial& comp : next) total = total + comp;
    vec = std::move(next);
  }
  assert(false && "Neumann iteration exceeded its degree bound");
  return total;
}

namespace {

std::pair<Polynomial, Polynomial> build_pq(const Specification& spec, TrackerMode mode,
                                           const VarContextPtr& ctx) {
  const Polynomial one = Polynomial::constant(ctx, 1);
  const Polynomial w = Polynomial::variable(ctx, VarContext::kW);
  const Polynomial u = Polynomial::variable(ctx, VarContext::kU);
  Polynomial p = one;
  Polynomial q = one;
  for (int i = 1; i <= spec.k(); ++i) {
    const Polynomial gi = build_g(i, spec, mode, ctx);
    p = p * (one + gi * u);
    q = q * (one + gi * w);
  }
  return {std::move(p), std::move(q)};
}

}  // namespace

bool gf_explicit_check(const Specification& spec, TrackerMode mode, const Polynomial& g) {
  const VarContextPtr ctx = g.ctx_ptr();
  const auto [p, q] = build_pq(spec, mode, ctx);
  const Polynomial w = Polynomial::variable(ctx, VarContext::kW);
  const Polynomial u = Polynomial::variable(ctx, VarContext::kU);
  const Polynomial lhs = (u * q - w * p) * g;
  const Polynomial rhs = p - q;
  return lhs == rhs;
}

Polynomial gf_explicit_construct(const Specification& spec, TrackerMode mode) {
  const VarContextPtr ctx = make_var_context(spec);
  const auto [p, q] = build_pq(spec, mode, ctx);
  const Polynomial w = Polynomial::variable(ctx, VarContext::kW);
  const Polynomial u = Polynomial::variable(ctx, VarContext::kU);
  // Both numerator and denominator of the product identity vanish at u = w,
  // so the (u - w) factor divides out exactly; what remains of the
  // denominator is a unit series.
  const Polynomial num = poly_exact_div_linear(p - q, LinearFactor::kUMinusW);
  const Polynomial den = poly_exact_div_linear(u * q - w * p, LinearFactor::kUMinusW);
  return num * poly_inv_unit(den);
}

std::shared_ptr<const Polynomial> GfCache::get(const Specification& spec, TrackerMode mode,
                                               GfPath path) {
  const Key key{spec.counts(), mode, path};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Polynomial built = path == GfPath::kMatrix ? gf_matrix(spec, mode) : gf_recursive(spec, mode);
  auto value = std::make_shared<const Polynomial>(std::move(built));
  std::lock_guard<std::mutex> lock(mu_);
  cache_[key] = value;  // duplicate builds are identical; last write wins
  return value;
}

void GfCache::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  cache_.clear();
}

GfCache& global_gf_cache() {
  static GfCache cache;
  return cache;
}

}  // namespace runstat
