// Copyright 2026 The symcontain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Symbolic powers of codimension-h star configurations.
//
// A star configuration is cut out by n forms F_1..F_n, any h+1 of which form
// a complete intersection. Its symbolic powers are generated by products
// F^a = F_1^{a_1}...F_n^{a_n}, and F^a lies in I^(k) exactly when every
// h-subset of exponents sums to at least k. All routines here work on the
// exponent vectors a; the forms themselves are never materialized.

#ifndef SYMCONTAIN_STAR_HPP
#define SYMCONTAIN_STAR_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symcontain/core.hpp"
#include "symcontain/rational_lp.hpp"

namespace symcontain {

class StarConfig {
 public:
  using Degree = std::int64_t;

  /// n forms of degree 1, ambient dimension defaults to n.
  StarConfig(std::size_t n, std::size_t h) : StarConfig(n, h, std::vector<Degree>(n, 1)) {}

  StarConfig(std::size_t n, std::size_t h, std::vector<Degree> degrees,
             std::optional<std::size_t> ambient_dim = std::nullopt)
      : n_(n), h_(h), degrees_(std::move(degrees)), ambient_dim_(ambient_dim.value_or(n)) {
    if (n_ == 0) throw invalid_input("star configuration needs at least one form");
    if (h_ < 1 || h_ > n_) throw invalid_input("codimension h must satisfy 1 <= h <= n");
    if (h_ > ambient_dim_) throw invalid_input("codimension h exceeds ambient dimension N");
    if (degrees_.size() != n_) throw invalid_input("need one degree per form");
    for (auto d : degrees_) {
      if (d < 1) throw invalid_input("form degrees must be positive");
    }
  }

  std::size_t n() const { return n_; }
  std::size_t h() const { return h_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Degree>& degrees() const { return degrees_; }

  bool linear_forms() const {
    return std::all_of(degrees_.begin(), degrees_.end(), [](Degree d) { return d == 1; });
  }

  friend bool operator==(const StarConfig&, const StarConfig&) = default;

 private:
  std::size_t n_;
  std::size_t h_;
  std::vector<Degree> degrees_;
  std::size_t ambient_dim_;
};

/// Witness that F^a lies in m^{(r-1)(h-1)+c-1} (I^(m))^r: F^a = f g with
/// f = (F^base)^r, F^base in I^(m), and g = F^leftover of high enough degree.
struct StarCertificate {
  StarConfig config;
  ExponentVector input;
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::int64_t c = 0;
  ExponentVector base;
  IndexSet tight_subset;
  ExponentVector leftover;
  std::int64_t leftover_degree = 0;
  std::int64_t required_degree = 0;
};

namespace detail {

inline void for_each_subset(std::size_t n, std::size_t h, const std::function<void(const IndexSet&)>& fn) {
  IndexSet idx(h);
  for (std::size_t i = 0; i < h; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = h;
    while (i > 0 && idx[i - 1] == n - h + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < h; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void require_length(const StarConfig& cfg, const ExponentVector& a) {
  if (a.size() != cfg.n()) throw invalid_input("exponent vector length must equal n");
}

// Threshold k such that the containment certificate needs F^a in I^(k).
inline std::int64_t star_containment_power(std::size_t h, std::int64_t m, std::int64_t r, std::int64_t c) {
  const auto hh = static_cast<std::int64_t>(h);
  return r * (m + hh - 1) - hh + c;
}

inline std::int64_t star_required_degree(std::size_t h, std::int64_t r, std::int64_t c) {
  const auto hh = static_cast<std::int64_t>(h);
  return (r - 1) * (hh - 1) + c - 1;
}

}  // namespace detail

/// True iff F^a lies in I^(k).
inline bool star_member(const StarConfig& cfg, const ExponentVector& a, std::int64_t k) {
  detail::require_length(cfg, a);
  if (k <= 0) return true;
  return h_smallest_sum(a, cfg.h()).value >= k;
}

/// Least degree of a product F^a in I^(k).
///
/// Any feasible a can be lowered so that every entry outside its h smallest
/// equals the h-th smallest value M (with ceil(k/h) <= M <= k). Such vectors
/// are exactly those with all entries <= M and total >= (n-h)M + k, so for
/// each M the cheapest one fills the lowest-degree forms up to M first.
/// With linear forms this collapses to k + (n-h) ceil(k/h).
inline std::int64_t star_alpha(const StarConfig& cfg, std::int64_t k) {
  if (k < 1) throw invalid_input("star_alpha needs k >= 1");
  const auto n = static_cast<std::int64_t>(cfg.n());
  const auto h = static_cast<std::int64_t>(cfg.h());
  if (cfg.linear_forms()) return k + (n - h) * ceil_div(k, h);

  auto degrees = cfg.degrees();
  std::sort(degrees.begin(), degrees.end());
  std::optional<std::int64_t> best;
  for (std::int64_t cap = ceil_div(k, h); cap <= k; ++cap) {
    std::int64_t units = (n - h) * cap + k;
    std::int64_t cost = 0;
    for (auto d : degrees) {
      const std::int64_t take = std::min(cap, units);
      cost += take * d;
      units -= take;
    }
    if (!best || cost < *best) best = cost;
  }
  return *best;
}

struct StarWaldschmidt {
  BigRational value;
  /// Optimal fractional exponents a_j (each h-subset sums to >= 1).
  std::vector<BigRational> exponents;
};

/// Waldschmidt constant as the exact LP optimum
///   min sum_j deg_j a_j  s.t.  sum_{j in E} a_j >= 1 for every h-subset E, a >= 0.
/// Solved through its packing dual so the all-slack basis is feasible.
inline StarWaldschmidt star_waldschmidt_lp(const StarConfig& cfg) {
  const std::size_t n = cfg.n();
  std::vector<IndexSet> subsets;
  detail::for_each_subset(n, cfg.h(), [&](const IndexSet& s) { subsets.push_back(s); });

  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(subsets.size(), BigRational(0)));
  for (std::size_t e = 0; e < subsets.size(); ++e) {
    for (Index j : subsets[e]) a[j][e] = 1;
  }
  std::vector<BigRational> b;
  for (auto d : cfg.degrees()) b.emplace_back(d);
  std::vector<BigRational> c(subsets.size(), BigRational(1));

  PackingSimplex<BigRational> lp(std::move(a), std::move(b), std::move(c));
  auto sol = lp.solve();
  if (!sol) throw algorithm_invariant_violation("Waldschmidt LP reported unbounded");
  return {sol->value, sol->dual};
}

inline BigRational star_waldschmidt(const StarConfig& cfg) { return star_waldschmidt_lp(cfg).value; }

/// Splits F^a as (F^base)^r * F^leftover with F^base in I^(m) and the
/// leftover of degree >= (r-1)(h-1)+c-1.
///
/// base starts at floor(a/r) and is lowered one unit at a time (largest entry
/// first, lowest index among ties) until some h-subset sums to exactly m.
inline StarCertificate star_certify_containment(const StarConfig& cfg, const ExponentVector& a, std::int64_t m,
                                                std::int64_t r, std::int64_t c) {
  detail::require_length(cfg, a);
  if (m < 1 || r < 1 || c < 1) throw invalid_input("m, r, c must be positive");
  const std::int64_t power = detail::star_containment_power(cfg.h(), m, r, c);
  if (!star_member(cfg, a, power)) {
    throw not_a_member("input is not in I^(" + std::to_string(power) + ")");
  }

  std::vector<std::int64_t> d(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) d[j] = a[j] / r;
  ExponentVector base(d);
  auto stat = h_smallest_sum(base, cfg.h());
  if (stat.value < m) throw algorithm_invariant_violation("floor(a/r) has an h-subset summing below m");

  while (stat.value > m) {
    const auto largest = std::max_element(d.begin(), d.end());  // first maximum
    --*largest;
    base = ExponentVector(d);
    stat = h_smallest_sum(base, cfg.h());
  }

  std::vector<std::int64_t> g(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) g[j] = a[j] - r * d[j];
  ExponentVector leftover(g);

  StarCertificate cert{cfg, a, m, r, c, base, stat.witness, leftover, 0, 0};
  cert.leftover_degree = leftover.weighted_total(cfg.degrees());
  cert.required_degree = detail::star_required_degree(cfg.h(), r, c);
  if (cert.leftover_degree < cert.required_degree) {
    throw algorithm_invariant_violation("leftover degree below the required m-adic order");
  }
  return cert;
}

/// Recomputes every certificate invariant from scratch.
inline bool star_verify_certificate(const StarCertificate& cert) {
  const auto& cfg = cert.config;
  const std::size_t n = cfg.n();
  if (cert.input.size() != n || cert.base.size() != n || cert.leftover.size() != n) return false;
  if (cert.m < 1 || cert.r < 1 || cert.c < 1) return false;

  for (std::size_t j = 0; j < n; ++j) {
    if (cert.input[j] != cert.r * cert.base[j] + cert.leftover[j]) return false;
  }

  if (h_smallest_sum(cert.base, cfg.h()).value < cert.m) return false;

  if (cert.tight_subset.size() != cfg.h()) return false;
  std::int64_t tight_sum = 0;
  for (std::size_t i = 0; i < cert.tight_subset.size(); ++i) {
    const Index j = cert.tight_subset[i];
    if (j >= n) return false;
    if (i > 0 && cert.tight_subset[i - 1] >= j) return false;
    tight_sum += cert.base[j];
  }
  if (tight_sum != cert.m) return false;

  if (cert.required_degree != detail::star_required_degree(cfg.h(), cert.r, cert.c)) return false;
  if (cert.leftover_degree != cert.leftover.weighted_total(cfg.degrees())) return false;
  return cert.leftover_degree >= cert.required_degree;
}

}  // namespace symcontain

#endif  // SYMCONTAIN_STAR_HPP
