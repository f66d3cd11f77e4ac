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

// Dense monomial ideals, used as a brute-force oracle for the star engine
// when the forms are the coordinates themselves.

#ifndef SYMCONTAIN_MONOMIAL_IDEAL_HPP
#define SYMCONTAIN_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symcontain/core.hpp"
#include "symcontain/star.hpp"

namespace symcontain {

class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n_vars) : n_vars_(n_vars) {
    if (n_vars_ == 0) throw invalid_input("monomial ideal needs at least one variable");
  }

  MonomialIdeal(std::size_t n_vars, std::vector<ExponentVector> gens) : MonomialIdeal(n_vars) {
    for (const auto& g : gens) {
      if (g.size() != n_vars_) throw invalid_input("generator length mismatch");
    }
    gens_ = minimalize(std::move(gens));
  }

  static MonomialIdeal unit(std::size_t n_vars) { return MonomialIdeal(n_vars, {ExponentVector(n_vars)}); }

  /// Ideal generated by the variables with the given indices.
  static MonomialIdeal variables(std::size_t n_vars, const IndexSet& which) {
    std::vector<ExponentVector> gens;
    for (Index i : which) {
      if (i >= n_vars) throw invalid_input("variable index out of range");
      gens.push_back(ExponentVector(n_vars).with_entry(i, 1));
    }
    return MonomialIdeal(n_vars, std::move(gens));
  }

  std::size_t n_vars() const { return n_vars_; }
  const std::vector<ExponentVector>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  /// Minimal generators in canonical (lexicographic) order.
  static std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const ExponentVector& a, const ExponentVector& b) {
                if (a.total() != b.total()) return a.total() < b.total();
                return a < b;
              });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExponentVector> kept;
    // Sorted by degree, so only earlier generators can divide later ones.
    for (auto& g : gens) {
      const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return k.divides(g); });
      if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

 private:
  std::size_t n_vars_;
  std::vector<ExponentVector> gens_;
};

inline void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n_vars() != b.n_vars()) throw invalid_input("monomial ideals live in different rings");
}

inline MonomialIdeal mi_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> lcms;
  lcms.reserve(a.gens().size() * b.gens().size());
  for (const auto& x : a.gens()) {
    for (const auto& y : b.gens()) lcms.push_back(componentwise_max(x, y));
  }
  return MonomialIdeal(a.n_vars(), std::move(lcms));
}

inline MonomialIdeal mi_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> sums;
  sums.reserve(a.gens().size() * b.gens().size());
  for (const auto& x : a.gens()) {
    for (const auto& y : b.gens()) sums.push_back(x + y);
  }
  return MonomialIdeal(a.n_vars(), std::move(sums));
}

inline MonomialIdeal mi_power(const MonomialIdeal& a, std::int64_t k) {
  if (k < 0) throw invalid_input("power must be nonnegative");
  MonomialIdeal result = MonomialIdeal::unit(a.n_vars());
  for (std::int64_t i = 0; i < k; ++i) result = mi_product(result, a);
  return result;
}

inline bool mi_member(const MonomialIdeal& a, const ExponentVector& v) {
  if (v.size() != a.n_vars()) throw invalid_input("exponent vector length mismatch");
  return std::any_of(a.gens().begin(), a.gens().end(), [&](const ExponentVector& g) { return g.divides(v); });
}

inline std::int64_t mi_alpha(const MonomialIdeal& a) {
  if (a.is_zero()) throw invalid_input("zero ideal has no least degree");
  std::int64_t best = a.gens().front().total();
  for (const auto& g : a.gens()) best = std::min(best, g.total());
  return best;
}

/// I^(k) for the star configuration of the n coordinate hyperplanes:
/// the intersection over all h-subsets E of (x_j : j in E)^k.
inline MonomialIdeal coordinate_star_symbolic(std::size_t n, std::size_t h, std::int64_t k) {
  if (h < 1 || h > n) throw invalid_input("need 1 <= h <= n");
  if (k < 1) throw invalid_input("need k >= 1");
  std::optional<MonomialIdeal> acc;
  detail::for_each_subset(n, h, [&](const IndexSet& subset) {
    auto component = mi_power(MonomialIdeal::variables(n, subset), k);
    acc = acc ? mi_intersect(*acc, component) : std::move(component);
  });
  return *acc;
}

struct CrosscheckMismatch {
  ExponentVector v;
  bool oracle = false;
  bool engine = false;
};

struct CrosscheckReport {
  std::size_t n = 0;
  std::size_t h = 0;
  std::int64_t k = 0;
  std::int64_t deg_bound = 0;
  std::size_t vectors_checked = 0;
  std::int64_t oracle_alpha = 0;
  std::int64_t engine_alpha = 0;
  std::vector<CrosscheckMismatch> mismatches;
  bool ok() const { return mismatches.empty() && oracle_alpha == engine_alpha; }
};

inline constexpr std::uint64_t kCrosscheckBudget = 1'000'000;

/// Compares star_member/star_alpha against the monomial oracle on every
/// exponent vector of total degree <= deg_bound.
inline CrosscheckReport crosscheck_star(std::size_t n, std::size_t h, std::int64_t k, std::int64_t deg_bound) {
  if (deg_bound < 0) throw invalid_input("degree bound must be nonnegative");
  if (binomial(n + static_cast<std::uint64_t>(deg_bound), n) > kCrosscheckBudget) {
    throw refused("enumeration exceeds " + std::to_string(kCrosscheckBudget) + " exponent vectors");
  }
  const StarConfig cfg(n, h);
  const MonomialIdeal oracle = coordinate_star_symbolic(n, h, k);

  CrosscheckReport report{n, h, k, deg_bound, 0, mi_alpha(oracle), star_alpha(cfg, k), {}};
  std::vector<std::int64_t> cur(n, 0);
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t pos, std::int64_t budget) {
    if (pos == n) {
      const ExponentVector v(cur);
      const bool o = mi_member(oracle, v);
      const bool e = star_member(cfg, v, k);
      ++report.vectors_checked;
      if (o != e) report.mismatches.push_back({v, o, e});
      return;
    }
    for (std::int64_t x = 0; x <= budget; ++x) {
      cur[pos] = x;
      walk(pos + 1, budget - x);
    }
    cur[pos] = 0;
  };
  walk(0, deg_bound);
  return report;
}

}  // namespace symcontain

#endif  // SYMCONTAIN_MONOMIAL_IDEAL_HPP
