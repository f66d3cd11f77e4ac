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

// Symbolic powers of determinantal and pfaffian ideals through the
// product-of-minors calculus.
//
// For I = I_t of a generic or symmetric matrix (or the 2t-pfaffian ideal of
// a skew-symmetric one), a product of minors of sizes s_1..s_u lies in I^(k)
// iff gamma = sum max{0, s_i - t + 1} >= k, and these products generate
// I^(k). A size-s factor has degree s (for pfaffians s is half the order).
// Shrinking a factor from size s to s - k is the Laplace/cofactor expansion
// step: it costs k units of gamma and contributes m^k.
//
// The calculus is modelled over any field; its validity in positive
// characteristic is assumed as for the characteristic-free description of
// these symbolic powers.

#ifndef SYMCONTAIN_DETERMINANTAL_HPP
#define SYMCONTAIN_DETERMINANTAL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcontain/core.hpp"

namespace symcontain {

enum class Flavor { generic, symmetric, pfaffian };

inline std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::generic: return "generic";
    case Flavor::symmetric: return "symmetric";
    case Flavor::pfaffian: return "pfaffian";
  }
  return "?";
}

inline Flavor parse_flavor(std::string_view s) {
  if (s == "generic") return Flavor::generic;
  if (s == "symmetric") return Flavor::symmetric;
  if (s == "pfaffian") return Flavor::pfaffian;
  throw invalid_input("unknown matrix flavor '" + std::string(s) + "'");
}

class MatrixShape {
 public:
  using Size = std::int64_t;

  /// p x q matrix of indeterminates, stored with p >= q.
  static MatrixShape generic(Size p, Size q, Size t) {
    if (p < q) std::swap(p, q);
    if (q < 1 || t < 1 || t > q) throw invalid_input("generic shape needs 1 <= t <= min(p, q)");
    return MatrixShape(Flavor::generic, p, q, t);
  }

  static MatrixShape symmetric(Size p, Size t) {
    if (p < 1 || t < 1 || t > p) throw invalid_input("symmetric shape needs 1 <= t <= p");
    return MatrixShape(Flavor::symmetric, p, p, t);
  }

  /// 2t-pfaffians of a p x p skew-symmetric matrix.
  static MatrixShape pfaffian(Size p, Size t) {
    if (t < 1 || 2 * t > p) throw invalid_input("pfaffian shape needs 1 <= t and 2t <= p");
    return MatrixShape(Flavor::pfaffian, p, p, t);
  }

  Flavor flavor() const { return flavor_; }
  Size p() const { return p_; }
  Size q() const { return q_; }
  Size t() const { return t_; }

  Size height() const {
    switch (flavor_) {
      case Flavor::generic: return (p_ - t_ + 1) * (q_ - t_ + 1);
      case Flavor::symmetric: return (p_ - t_ + 1) * (p_ - t_ + 2) / 2;
      case Flavor::pfaffian: return (p_ - 2 * t_ + 1) * (p_ - 2 * t_ + 2) / 2;
    }
    return 0;
  }

  /// Largest factor size (minor order, or half the pfaffian order).
  Size max_size() const {
    switch (flavor_) {
      case Flavor::generic: return q_;
      case Flavor::symmetric: return p_;
      case Flavor::pfaffian: return p_ / 2;
    }
    return 0;
  }

  Size contribution(Size s) const { return std::max<Size>(0, s - t_ + 1); }
  Size degree(Size s) const { return s; }

  friend bool operator==(const MatrixShape&, const MatrixShape&) = default;

 private:
  MatrixShape(Flavor f, Size p, Size q, Size t) : flavor_(f), p_(p), q_(q), t_(t) {}

  Flavor flavor_;
  Size p_;
  Size q_;
  Size t_;
};

/// Sizes of the factors in a product of minors, for a fixed shape. Sizes
/// below t do not affect membership and are dropped on construction; the
/// rest are kept in descending order.
class SizeMultiset {
 public:
  using Size = MatrixShape::Size;

  SizeMultiset() = default;
  SizeMultiset(const MatrixShape& shape, const std::vector<Size>& raw) {
    for (Size s : raw) {
      if (s < 1 || s > shape.max_size()) {
        throw invalid_input("factor size " + std::to_string(s) + " outside [1, " +
                            std::to_string(shape.max_size()) + "]");
      }
      if (s >= shape.t()) sizes_.push_back(s);
    }
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
  }

  std::size_t size() const { return sizes_.size(); }
  bool empty() const { return sizes_.empty(); }
  Size operator[](std::size_t i) const { return sizes_[i]; }
  const std::vector<Size>& sizes() const { return sizes_; }

  friend SizeMultiset merge(const MatrixShape& shape, const SizeMultiset& a, const SizeMultiset& b) {
    auto all = a.sizes_;
    all.insert(all.end(), b.sizes_.begin(), b.sizes_.end());
    return SizeMultiset(shape, all);
  }

 private:
  std::vector<Size> sizes_;
};

inline std::int64_t gamma(const MatrixShape& shape, const SizeMultiset& sizes) {
  std::int64_t total = 0;
  for (auto s : sizes.sizes()) {
    if (s < 1 || s > shape.max_size()) throw invalid_input("factor size outside [1, M]");
    total += shape.contribution(s);
  }
  return total;
}

inline bool det_member(const MatrixShape& shape, const SizeMultiset& sizes, std::int64_t k) {
  return gamma(shape, sizes) >= k;
}

/// Least degree in I^(k). Each factor buys at most M-t+1 units of gamma at a
/// cost of t-1 degrees above its contribution, so the optimum uses as many
/// maximal factors as possible.
inline std::int64_t det_alpha(const MatrixShape& shape, std::int64_t k) {
  if (k < 1) throw invalid_input("det_alpha needs k >= 1");
  const auto t = shape.t();
  return k + (t - 1) * ceil_div(k, shape.max_size() - t + 1);
}

/// Largest degree of an irredundant product in I^(m): one whose gamma drops
/// below m when any factor is removed or any factor of size > t is shrunk by
/// one. Found by exhaustive search over nonincreasing size sequences; a
/// product with gamma >= m is never extended since every extension is
/// redundant.
inline std::int64_t det_omega(const MatrixShape& shape, std::int64_t m) {
  if (m < 1) throw invalid_input("det_omega needs m >= 1");
  const auto t = shape.t();
  const auto top = shape.max_size();
  std::vector<std::int64_t> factors;
  std::int64_t best = 0;

  auto irredundant = [&](std::int64_t g) {
    for (auto s : factors) {
      if (g - shape.contribution(s) >= m) return false;
      if (s > t && g - 1 >= m) return false;
    }
    return true;
  };

  std::function<void(std::int64_t, std::int64_t, std::int64_t)> search = [&](std::int64_t max_next, std::int64_t g,
                                                                              std::int64_t deg) {
    if (g >= m) {
      if (irredundant(g)) best = std::max(best, deg);
      return;
    }
    for (auto s = max_next; s >= t; --s) {
      factors.push_back(s);
      search(s, g + shape.contribution(s), deg + shape.degree(s));
      factors.pop_back();
    }
  };
  search(top, 0, 0);
  return best;
}

/// Which containment a certificate witnesses.
///   basic:   I^(r(h+m-1))       in m^{r(h-1)}         (I^(m))^r
///   general: I^(r(m+h-1)-h+c)   in m^{(r-1)(h-1)+c-1} (I^(m))^r
enum class ContainmentMode { basic, general };

inline std::string_view mode_name(ContainmentMode m) {
  return m == ContainmentMode::basic ? "theorem34" : "remark35";
}

inline ContainmentMode parse_mode(std::string_view s) {
  if (s == "theorem34") return ContainmentMode::basic;
  if (s == "remark35") return ContainmentMode::general;
  throw invalid_input("unknown containment mode '" + std::string(s) + "'");
}

struct Shrink {
  Index index = 0;
  std::int64_t amount = 0;
  friend bool operator==(const Shrink&, const Shrink&) = default;
};

struct DetGroup {
  IndexSet members;
  std::optional<Shrink> shrink;
  friend bool operator==(const DetGroup&, const DetGroup&) = default;
};

enum class DetConstruction { greedy, symmetric_pairing };

struct DetCertificate {
  MatrixShape shape;
  ContainmentMode mode = ContainmentMode::basic;
  std::vector<std::int64_t> sizes;
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::optional<std::int64_t> c;  // general mode only
  std::vector<DetGroup> groups;
  IndexSet leftover;
  std::int64_t madic_budget = 0;
  std::int64_t required_budget = 0;
  DetConstruction construction = DetConstruction::greedy;  // informational, not verified
};

namespace detail {

inline std::int64_t det_containment_power(const MatrixShape& shape, ContainmentMode mode, std::int64_t m,
                                          std::int64_t r, std::int64_t c) {
  const auto h = shape.height();
  if (mode == ContainmentMode::basic) return r * (h + m - 1);
  return r * (m + h - 1) - h + c;
}

inline std::int64_t det_required_budget(const MatrixShape& shape, ContainmentMode mode, std::int64_t r,
                                        std::int64_t c) {
  const auto h = shape.height();
  if (mode == ContainmentMode::basic) return r * (h - 1);
  return (r - 1) * (h - 1) + c - 1;
}

// Each greedy group consumes at most m + (M - t) units of gamma. These are
// the flavor-specific checks that r such groups fit under the threshold.
inline bool det_groups_fit(const MatrixShape& shape, ContainmentMode mode, std::int64_t r, std::int64_t c) {
  const auto h = shape.height();
  const auto t = shape.t();
  if (mode == ContainmentMode::basic || r == 1) return shape.max_size() - t + 1 <= h;
  switch (shape.flavor()) {
    case Flavor::generic: {
      const auto P = shape.p() - t + 1;
      const auto Q = shape.q() - t + 1;
      return P * Q * (r - 1) - r * Q + c >= 0;
    }
    case Flavor::symmetric: {
      const auto P = shape.p() - t + 1;
      const auto tri = P * (P + 1) / 2;
      return r * (tri - P) - tri + c >= 0;
    }
    case Flavor::pfaffian: {
      const auto P = shape.p() - 2 * t;
      return r * P * (P + 2) + 2 * c >= (P + 1) * (P + 2);
    }
  }
  return false;
}

inline bool is_symmetric_pairing_case(const MatrixShape& shape, ContainmentMode mode, std::int64_t r) {
  return shape.flavor() == Flavor::symmetric && mode == ContainmentMode::general && r == 2 &&
         shape.p() == shape.t() + 1;
}

// r groups, each filled largest-first until its gamma reaches m; the last
// factor absorbs any overshoot as a shrink.
inline void greedy_groups(const MatrixShape& shape, const SizeMultiset& sizes, std::int64_t m, std::int64_t r,
                          DetCertificate& cert) {
  std::size_t next = 0;
  for (std::int64_t j = 0; j < r; ++j) {
    DetGroup group;
    std::int64_t acc = 0;
    while (acc < m) {
      if (next == sizes.size()) throw algorithm_invariant_violation("ran out of factors while forming a group");
      acc += shape.contribution(sizes[next]);
      group.members.push_back(next++);
    }
    if (acc > m) group.shrink = Shrink{group.members.back(), acc - m};
    cert.groups.push_back(std::move(group));
  }
  for (std::size_t i = next; i < sizes.size(); ++i) cert.leftover.push_back(i);
}

// Symmetric matrix with p = t+1, r = 2: only sizes t+1 (worth 2) and t
// (worth 1) occur. Each group takes (t+1)-minors two units at a time and
// fills an odd remainder with a t-minor, or with a (t+1)-minor shrunk by one
// when no t-minor is left.
inline void symmetric_pairing_groups(const MatrixShape& shape, const SizeMultiset& sizes, std::int64_t m,
                                     DetCertificate& cert) {
  const auto t = shape.t();
  IndexSet large;
  IndexSet small;
  for (std::size_t i = 0; i < sizes.size(); ++i) (sizes[i] == t + 1 ? large : small).push_back(i);
  std::size_t next_large = 0;
  std::size_t next_small = 0;

  for (int j = 0; j < 2; ++j) {
    DetGroup group;
    const auto large_left = static_cast<std::int64_t>(large.size() - next_large);
    const auto small_left = static_cast<std::int64_t>(small.size() - next_small);
    const bool convert = (m % 2 == 1) && small_left == 0;
    std::int64_t pairs = std::min(large_left, m / 2);
    std::int64_t singles = m - 2 * pairs;
    if (convert) {
      pairs = m / 2;
      singles = 0;
      if (large_left < pairs + 1) throw algorithm_invariant_violation("too few (t+1)-minors to pair");
    } else if (singles > small_left) {
      throw algorithm_invariant_violation("too few t-minors to pair");
    }
    for (std::int64_t i = 0; i < pairs; ++i) group.members.push_back(large[next_large++]);
    for (std::int64_t i = 0; i < singles; ++i) group.members.push_back(small[next_small++]);
    if (convert) {
      const Index idx = large[next_large++];
      group.members.push_back(idx);
      group.shrink = Shrink{idx, 1};
    }
    std::sort(group.members.begin(), group.members.end());
    cert.groups.push_back(std::move(group));
  }
  for (std::size_t i = next_large; i < large.size(); ++i) cert.leftover.push_back(large[i]);
  for (std::size_t i = next_small; i < small.size(); ++i) cert.leftover.push_back(small[i]);
  std::sort(cert.leftover.begin(), cert.leftover.end());
}

inline std::int64_t det_budget(const MatrixShape& shape, const std::vector<std::int64_t>& sizes,
                               const DetCertificate& cert) {
  std::int64_t budget = 0;
  for (const auto& g : cert.groups) {
    if (g.shrink) budget += g.shrink->amount;
  }
  for (Index i : cert.leftover) budget += shape.degree(sizes[i]);
  return budget;
}

}  // namespace detail

/// Writes a product of minors as an element of m^budget (I^(m))^r.
/// For mode basic the argument c is ignored.
inline DetCertificate det_certify_containment(const MatrixShape& shape, const SizeMultiset& sizes, std::int64_t m,
                                              std::int64_t r, std::int64_t c, ContainmentMode mode) {
  if (m < 1 || r < 1) throw invalid_input("m and r must be positive");
  if (mode == ContainmentMode::general && c < 1) throw invalid_input("c must be positive");
  const auto power = detail::det_containment_power(shape, mode, m, r, c);
  if (!det_member(shape, sizes, power)) {
    throw not_a_member("product is not in I^(" + std::to_string(power) + ")");
  }
  if (!detail::det_groups_fit(shape, mode, r, c)) {
    throw algorithm_invariant_violation("flavor feasibility inequality failed");
  }

  DetCertificate cert{shape, mode, sizes.sizes(), m, r, std::nullopt, {}, {}, 0, 0, DetConstruction::greedy};
  if (mode == ContainmentMode::general) cert.c = c;

  if (detail::is_symmetric_pairing_case(shape, mode, r)) {
    cert.construction = DetConstruction::symmetric_pairing;
    detail::symmetric_pairing_groups(shape, sizes, m, cert);
  } else {
    detail::greedy_groups(shape, sizes, m, r, cert);
  }

  cert.madic_budget = detail::det_budget(shape, cert.sizes, cert);
  cert.required_budget = detail::det_required_budget(shape, mode, r, c);
  if (cert.madic_budget < cert.required_budget) {
    throw algorithm_invariant_violation("m-adic budget below the required order");
  }
  return cert;
}

inline bool det_verify_certificate(const DetCertificate& cert) {
  const auto& shape = cert.shape;
  const auto t = shape.t();
  const auto top = shape.max_size();
  if (cert.m < 1 || cert.r < 1) return false;
  if (cert.mode == ContainmentMode::general && (!cert.c || *cert.c < 1)) return false;
  for (auto s : cert.sizes) {
    if (s < t || s > top) return false;
  }
  if (cert.groups.size() != static_cast<std::size_t>(cert.r)) return false;

  std::vector<int> seen(cert.sizes.size(), 0);
  auto mark = [&](Index i) {
    if (i >= seen.size()) return false;
    return ++seen[i] == 1;
  };

  for (const auto& g : cert.groups) {
    if (g.members.empty()) return false;
    std::int64_t acc = 0;
    for (Index i : g.members) {
      if (!mark(i)) return false;
      acc += shape.contribution(cert.sizes[i]);
    }
    if (g.shrink) {
      const auto& sh = *g.shrink;
      if (std::find(g.members.begin(), g.members.end(), sh.index) == g.members.end()) return false;
      if (sh.amount < 0 || sh.amount > top - t) return false;
      if (cert.sizes[sh.index] - sh.amount < t) return false;
      acc -= sh.amount;
    }
    if (acc < cert.m) return false;
  }
  for (Index i : cert.leftover) {
    if (!mark(i)) return false;
  }
  if (std::any_of(seen.begin(), seen.end(), [](int v) { return v != 1; })) return false;

  const std::int64_t c = cert.c.value_or(1);
  if (cert.required_budget != detail::det_required_budget(shape, cert.mode, cert.r, c)) return false;
  if (cert.madic_budget != detail::det_budget(shape, cert.sizes, cert)) return false;
  return cert.madic_budget >= cert.required_budget;
}

struct DemaillyRow {
  std::int64_t n = 0;
  BigRational lhs;
  BigRational rhs;
  bool pass = false;
};

struct DemaillyReport {
  std::int64_t m = 0;
  std::vector<DemaillyRow> rows;
  bool all_pass = true;
};

/// Compares alpha(I^(n))/n against (alpha(I^(m)) + h - 1)/(m + h - 1) for
/// n = 1..n_max.
inline DemaillyReport det_demailly_check(const MatrixShape& shape, std::int64_t m, std::int64_t n_max) {
  if (m < 1 || n_max < 1) throw invalid_input("m and n_max must be positive");
  const auto h = shape.height();
  DemaillyReport report;
  report.m = m;
  const BigRational rhs = make_rational(det_alpha(shape, m) + h - 1, m + h - 1);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    DemaillyRow row{n, make_rational(det_alpha(shape, n), n), rhs, false};
    row.pass = row.lhs >= row.rhs;
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace symcontain

#endif  // SYMCONTAIN_DETERMINANTAL_HPP
