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

#ifndef SYMCONTAIN_CORE_HPP
#define SYMCONTAIN_CORE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symcontain/errors.hpp"

namespace symcontain {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using Index = std::size_t;
using IndexSet = std::vector<Index>;

/// Ceiling of a / b for a >= 0, b > 0.
template <class Int>
constexpr Int ceil_div(Int a, Int b) {
  return (a + b - 1) / b;
}

/// Exact binomial coefficient C(n, k); zero when k > n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // Each partial product result * (n - i) / (i + 1) is itself a binomial,
  // so the division is exact.
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

inline BigInt power(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// Largest k with k^n <= s, in exact integer arithmetic.
inline BigInt integer_nth_root(const BigInt& s, unsigned n) {
  if (s < 1 || n < 1) throw invalid_input("integer_nth_root needs s >= 1 and N >= 1");
  if (n == 1) return s;
  BigInt lo = 1;
  // 2^(ceil(bits / n)) is always an upper bound for the root.
  const auto bits = static_cast<unsigned>(boost::multiprecision::msb(s)) + 1;
  BigInt hi = BigInt(1) << (bits / n + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (power(mid, n) <= s) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline BigRational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw invalid_input("zero denominator");
  return BigRational(BigInt(num), BigInt(den));
}

/// Nonnegative exponent tuple of fixed length.
class ExponentVector {
 public:
  using value_type = std::int64_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t length) : entries_(length, 0) {}
  explicit ExponentVector(std::vector<value_type> entries) : entries_(std::move(entries)) {
    for (auto e : entries_) {
      if (e < 0) throw invalid_input("exponent entries must be nonnegative");
    }
  }
  ExponentVector(std::initializer_list<value_type> entries)
      : ExponentVector(std::vector<value_type>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  std::span<const value_type> entries() const { return entries_; }
  const std::vector<value_type>& to_vector() const { return entries_; }

  value_type total() const { return std::accumulate(entries_.begin(), entries_.end(), value_type{0}); }

  /// Weighted total sum_j entries[j] * weights[j].
  value_type weighted_total(std::span<const value_type> weights) const {
    if (weights.size() != entries_.size()) throw invalid_input("weight length mismatch");
    value_type s = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) s += entries_[i] * weights[i];
    return s;
  }

  /// Componentwise divisibility: every entry of *this is <= the matching entry of other.
  bool divides(const ExponentVector& other) const {
    require_same_length(other);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] > other.entries_[i]) return false;
    }
    return true;
  }

  ExponentVector with_entry(std::size_t i, value_type v) const {
    auto copy = entries_;
    copy.at(i) = v;
    return ExponentVector(std::move(copy));
  }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    a.require_same_length(b);
    std::vector<value_type> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.entries_[i] + b.entries_[i];
    return ExponentVector(std::move(out));
  }

  friend ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b) {
    a.require_same_length(b);
    std::vector<value_type> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a.entries_[i], b.entries_[i]);
    return ExponentVector(std::move(out));
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
  }

 private:
  void require_same_length(const ExponentVector& other) const {
    if (other.size() != size()) throw invalid_input("exponent vector length mismatch");
  }

  std::vector<value_type> entries_;
};

/// Minimum h-subset sum of a vector together with the subset realizing it.
struct HSubsetStat {
  std::size_t h = 0;
  std::int64_t value = 0;
  IndexSet witness;  // sorted ascending
};

/// Sum of the h smallest entries. Among tied minimizers the witness is the
/// lexicographically smallest index set.
inline HSubsetStat h_smallest_sum(const ExponentVector& v, std::size_t h) {
  if (h == 0) throw invalid_input("h must be positive");
  if (h > v.size()) throw invalid_input("h exceeds vector length");
  IndexSet order(v.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return v[a] < v[b]; });
  HSubsetStat stat;
  stat.h = h;
  stat.witness.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(h));
  std::sort(stat.witness.begin(), stat.witness.end());
  for (Index i : stat.witness) stat.value += v[i];
  return stat;
}

}  // namespace symcontain

#endif  // SYMCONTAIN_CORE_HPP
