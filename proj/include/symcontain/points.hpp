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

// Numeric certification of Demailly's bound for s general points in P^N.
//
// The geometric argument reduces to a chain of integer inequalities:
//   k = floor(s^(1/N)) bounds the Waldschmidt constant from below,
//   w (least with (s-1) C(m+N-1, N) < C(N+w, N)) bounds reg I^(m) by m + w,
//   and for all r past an explicit threshold
//       k (r(m+N-1) - N + 1) >= r (m + w + N - 1),
//   which yields I^(r(m+N-1)-N+1) in m^{r(N-1)} (I^(m))^r for generic points
//   and hence the bound. Only these inequalities are computed here; the
//   passage from generic to general points is not.
//
// The hypothesis used is s >= (2m+2)^N, relaxed to (2m+1)^N for N >= 4 and
// to (2m)^N for N >= 4, m >= 3 or N >= 5, m >= 2. The gate is (2m+2)^N,
// not (2m+3)^N.

#ifndef SYMCONTAIN_POINTS_HPP
#define SYMCONTAIN_POINTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcontain/core.hpp"

namespace symcontain {

/// C((k-1)(m+N-1)+N-1, N) >= (k+1)^N C(m+N-1, N).
inline bool binomial_inequality_holds(std::uint64_t N, std::uint64_t m, std::uint64_t k) {
  if (N < 1 || m < 1 || k < 1) throw invalid_input("binomial inequality needs N, m, k >= 1");
  const BigInt lhs = binomial((k - 1) * (m + N - 1) + N - 1, N);
  const BigInt rhs = power(BigInt(k + 1), static_cast<unsigned>(N)) * binomial(m + N - 1, N);
  return lhs >= rhs;
}

/// Smallest k from which the binomial inequality is known to hold for (N, m):
/// 2m+2 in general, 2m+1 for N >= 4, 2m for N >= 4 with m >= 3 and for
/// N >= 5 with m >= 2.
inline std::uint64_t binomial_inequality_threshold(std::uint64_t N, std::uint64_t m) {
  if (N >= 5 && m >= 2) return 2 * m;
  if (N >= 4 && m >= 3) return 2 * m;
  if (N >= 4) return 2 * m + 1;
  return 2 * m + 2;
}

struct SweepEntry {
  std::uint64_t N = 0;
  std::uint64_t m = 0;
  std::uint64_t k_tested_max = 0;
  /// Least k0 with the inequality true for every k in [k0, k_tested_max];
  /// nullopt when it fails at k_tested_max itself.
  std::optional<std::uint64_t> observed_min_k;
  std::uint64_t known_threshold = 0;
  /// True when the inequality holds on [known_threshold, k_tested_max].
  bool agrees = false;
};

struct SweepReport {
  std::vector<SweepEntry> entries;
  bool all_agree = true;
};

inline SweepReport binomial_inequality_sweep(std::uint64_t N_lo, std::uint64_t N_hi, std::uint64_t m_lo, std::uint64_t m_hi,
                                 std::uint64_t k_extra_max) {
  if (N_lo < 1 || m_lo < 1 || N_lo > N_hi || m_lo > m_hi) throw invalid_input("sweep ranges must be nonempty");
  SweepReport report;
  for (auto N = N_lo; N <= N_hi; ++N) {
    for (auto m = m_lo; m <= m_hi; ++m) {
      SweepEntry e;
      e.N = N;
      e.m = m;
      e.k_tested_max = 2 * m + 2 + k_extra_max;
      e.known_threshold = binomial_inequality_threshold(N, m);
      std::uint64_t k0 = e.k_tested_max + 1;
      while (k0 > 1 && binomial_inequality_holds(N, m, k0 - 1)) --k0;
      if (k0 <= e.k_tested_max) e.observed_min_k = k0;
      e.agrees = e.observed_min_k && *e.observed_min_k <= e.known_threshold;
      report.all_agree = report.all_agree && e.agrees;
      report.entries.push_back(e);
    }
  }
  return report;
}

/// Least w with (s-1) C(m+N-1, N) < C(N+w, N); reg I^(m) <= m + w.
inline std::uint64_t trung_valla_w(std::uint64_t N, std::uint64_t m, const BigInt& s) {
  if (N < 1 || m < 1) throw invalid_input("N and m must be positive");
  if (s < 2) throw invalid_input("need s >= 2 points");
  const BigInt target = (s - 1) * binomial(m + N - 1, N);
  auto above = [&](std::uint64_t w) { return target < binomial(N + w, N); };
  if (above(0)) return 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 1;
  while (!above(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const auto mid = lo + (hi - lo) / 2;
    (above(mid) ? hi : lo) = mid;
  }
  return hi;
}

struct TraceEntry {
  std::string name;
  BigInt lhs;
  BigInt rhs;
  bool strict = false;  // holds means lhs > rhs rather than lhs >= rhs
  bool holds() const { return strict ? lhs > rhs : lhs >= rhs; }
};

/// Trace entries whose check is strict (lhs > rhs).
inline bool strict_trace_entry(std::string_view name) {
  return name == "root_upper" || name == "regularity_w_upper" || name == "slope_positive";
}

struct ThresholdResult {
  BigInt k;
  std::uint64_t w = 0;
  BigInt reg_bound;
  std::uint64_t r_threshold = 0;
  bool below_hypothesis = false;  // s < (2m+2)^N: no guarantee attached
};

namespace detail {

inline BigInt s_floor(std::uint64_t N, std::uint64_t m) { return power(BigInt(2 * m + 2), static_cast<unsigned>(N)); }

// k (r(m+N-1) - N + 1) versus r (R + N - 1).
inline TraceEntry regularity_with_madic(std::uint64_t N, std::uint64_t m, const BigInt& k, const BigInt& R,
                                        std::uint64_t r) {
  const BigInt rr(r);
  return {"alpha_bound_vs_reg_plus_madic", k * (rr * (m + N - 1) - N + 1), rr * (R + N - 1), false};
}

// k (r(m+N-1) - N + 1) versus r R: saturation degree of (I^(m))^r.
inline TraceEntry regularity_saturation(std::uint64_t N, std::uint64_t m, const BigInt& k, const BigInt& R,
                                        std::uint64_t r) {
  const BigInt rr(r);
  return {"alpha_bound_vs_saturation", k * (rr * (m + N - 1) - N + 1), rr * R, false};
}

}  // namespace detail

/// Minimal r such that k(r'(m+N-1) - N + 1) >= r'(R + N - 1) for every r' >= r,
/// with R = m + w. Throws no_threshold when the slope k(m+N-1) - (R+N-1) is
/// not positive.
inline ThresholdResult containment_threshold(std::uint64_t N, std::uint64_t m, const BigInt& s) {
  if (N < 1 || m < 1) throw invalid_input("N and m must be positive");
  ThresholdResult res;
  res.below_hypothesis = s < detail::s_floor(N, m);
  res.k = integer_nth_root(s, static_cast<unsigned>(N));
  res.w = trung_valla_w(N, m, s);
  res.reg_bound = BigInt(m + res.w);
  const BigInt slope = res.k * (m + N - 1) - (res.reg_bound + N - 1);
  if (slope <= 0) {
    throw no_threshold("k(m+N-1) = " + to_string(BigInt(res.k * (m + N - 1))) + " is not greater than reg bound + N - 1 = " +
                       to_string(BigInt(res.reg_bound + N - 1)));
  }
  const BigInt need = res.k * (N - 1);
  const BigInt thr = (need + slope - 1) / slope;
  res.r_threshold = thr < 1 ? 1 : static_cast<std::uint64_t>(thr);
  return res;
}

/// Trace of the inequalities checked by containment_threshold, evaluated at r.
inline std::vector<TraceEntry> threshold_trace(std::uint64_t N, std::uint64_t m, const ThresholdResult& t,
                                               std::uint64_t r) {
  return {detail::regularity_with_madic(N, m, t.k, t.reg_bound, r),
          detail::regularity_saturation(N, m, t.k, t.reg_bound, r)};
}

struct HypothesisBound {
  std::string label;  // e.g. "(2m+2)^N"
  BigInt value;
};

/// Strongest point-count hypothesis available for (N, m).
inline HypothesisBound hypothesis_bound(std::uint64_t N, std::uint64_t m) {
  const auto base = binomial_inequality_threshold(N, m);
  const std::string label = base == 2 * m + 2 ? "(2m+2)^N" : base == 2 * m + 1 ? "(2m+1)^N" : "(2m)^N";
  return {label, power(BigInt(base), static_cast<unsigned>(N))};
}

struct GeneralPointsCertificate {
  std::uint64_t N = 0;
  std::uint64_t m = 0;
  BigInt s;
  BigInt k;
  std::uint64_t w = 0;
  BigInt reg_bound;
  std::uint64_t r_threshold = 0;  // 0 when no threshold exists
  bool binomial_ok = false;
  BigRational demailly_rhs;
  std::vector<TraceEntry> trace;
  bool granted = false;
};

/// Demailly-type lower bound (alpha(I^(m)) + h - 1)/(m + h - 1) that follows
/// once I^(c(h+m-1)-h+1) lies in m^{c(h-1)} (I^(m))^c for some c.
inline BigRational demailly_from_containment(const BigInt& alpha_m, std::uint64_t m, std::uint64_t h) {
  if (m < 1 || h < 1) throw invalid_input("m and h must be positive");
  return BigRational(alpha_m + h - 1, BigInt(m + h - 1));
}

inline GeneralPointsCertificate certify_demailly_general_points(std::uint64_t N, std::uint64_t m, const BigInt& s) {
  if (N < 3) throw invalid_input("general-points certification needs N >= 3");
  if (m < 1) throw invalid_input("m must be positive");
  if (s < 2) throw invalid_input("need s >= 2 points");
  const auto gate = hypothesis_bound(N, m);
  if (s < gate.value) throw refused("s below " + gate.label + " = " + to_string(gate.value));

  GeneralPointsCertificate cert;
  cert.N = N;
  cert.m = m;
  cert.s = s;
  cert.k = integer_nth_root(s, static_cast<unsigned>(N));
  cert.w = trung_valla_w(N, m, s);
  cert.reg_bound = BigInt(m + cert.w);
  cert.binomial_ok = binomial_inequality_holds(N, m, static_cast<std::uint64_t>(cert.k));
  cert.demailly_rhs = demailly_from_containment(cert.k * m, m, N);

  const auto uN = static_cast<unsigned>(N);
  cert.trace.push_back({"root_lower", s, power(cert.k, uN), false});
  cert.trace.push_back({"root_upper", power(cert.k + 1, uN), s, true});
  const BigInt tv_target = (s - 1) * binomial(m + N - 1, N);
  cert.trace.push_back({"regularity_w_upper", binomial(N + cert.w, N), tv_target, true});
  if (cert.w > 0) cert.trace.push_back({"regularity_w_minimal", tv_target, binomial(N + cert.w - 1, N), false});
  cert.trace.push_back({"binomial_approximation",
                        binomial(static_cast<std::uint64_t>((cert.k - 1) * (m + N - 1) + N - 1), N),
                        power(cert.k + 1, uN) * binomial(m + N - 1, N), false});

  try {
    const auto thr = containment_threshold(N, m, s);
    cert.r_threshold = thr.r_threshold;
    const std::uint64_t r = thr.r_threshold;
    for (auto& e : threshold_trace(N, m, thr, r)) cert.trace.push_back(std::move(e));
    const BigInt rr(r);
    cert.trace.push_back({"symbolic_exponent_dominates", rr * (m + N - 1) - N + 1, rr * m, false});
  } catch (const no_threshold& e) {
    cert.r_threshold = 0;
    cert.trace.push_back({"slope_positive", cert.k * (m + N - 1), cert.reg_bound + N - 1, true});
  }

  cert.granted = cert.r_threshold >= 1 && cert.binomial_ok;
  for (const auto& e : cert.trace) cert.granted = cert.granted && e.holds();
  return cert;
}

/// Recomputes the certificate from (N, m, s) and compares every field.
inline bool verify_general_points_certificate(const GeneralPointsCertificate& cert) {
  GeneralPointsCertificate fresh;
  try {
    fresh = certify_demailly_general_points(cert.N, cert.m, cert.s);
  } catch (const std::exception&) {
    return false;
  }
  if (fresh.k != cert.k || fresh.w != cert.w || fresh.reg_bound != cert.reg_bound ||
      fresh.r_threshold != cert.r_threshold || fresh.binomial_ok != cert.binomial_ok ||
      fresh.granted != cert.granted || fresh.trace.size() != cert.trace.size()) {
    return false;
  }
  for (std::size_t i = 0; i < fresh.trace.size(); ++i) {
    const auto& a = fresh.trace[i];
    const auto& b = cert.trace[i];
    if (a.name != b.name || a.lhs != b.lhs || a.rhs != b.rhs || a.holds() != b.holds()) return false;
  }
  return cert.granted;
}

/// Known invariants of the Fermat-type ideal (x(y^n-z^n), y(z^n-x^n), z(x^n-y^n)).
struct FermatRecord {
  std::int64_t n;

  explicit FermatRecord(std::int64_t n_) : n(n_) {
    if (n < 3) throw invalid_input("Fermat ideals need n >= 3");
  }
  std::int64_t alpha_of_power_3k(std::int64_t k) const { return 3 * n * k; }
  std::int64_t omega_of_power_kn(std::int64_t k) const { return k * n * (n + 1); }
  BigRational waldschmidt() const { return BigRational(n); }
  std::int64_t big_height() const { return 2; }
};

struct FermatRow {
  std::int64_t k = 0;
  BigInt naive_lhs;  // alpha(I^(3(kn+1)))
  BigInt naive_rhs;  // 3 + 3 omega(I^(kn))
  bool naive_fails = false;
  BigRational multiple3_rhs;  // (alpha(I^(3k)) + 1) / (3k + 1)
  bool multiple3_ok = false;
  BigRational plus2_rhs;  // (alpha bound of I^(3k+2) + 1) / (3k + 3)
  bool plus2_ok = false;
};

struct FermatReport {
  std::int64_t n = 0;
  std::vector<FermatRow> rows;
  bool all_pass = true;
};

inline FermatReport fermat_checks(std::int64_t n, std::int64_t k_max) {
  const FermatRecord rec(n);
  if (k_max < 1) throw invalid_input("k_max must be positive");
  FermatReport report;
  report.n = n;
  const auto h = rec.big_height();
  for (std::int64_t k = 1; k <= k_max; ++k) {
    FermatRow row;
    row.k = k;
    // alpha(I^(3(kn+1))) = 3(kn+1)n against h-1 + (h-1) omega(I^(kn)) with r = 3.
    row.naive_lhs = rec.alpha_of_power_3k(k * n + 1);
    row.naive_rhs = BigInt(3 * (h - 1) + 3 * rec.omega_of_power_kn(k));
    row.naive_fails = row.naive_lhs < row.naive_rhs;

    row.multiple3_rhs = make_rational(rec.alpha_of_power_3k(k) + h - 1, 3 * k + h - 1);
    row.multiple3_ok = rec.waldschmidt() >= row.multiple3_rhs;

    // I^(3k+3) in m I^(3k+2) gives alpha(I^(3k+2)) <= (3k+3)n - 1.
    const std::int64_t alpha_plus2 = (3 * k + 3) * n - 1;
    row.plus2_rhs = make_rational(alpha_plus2 + h - 1, 3 * k + 3);
    row.plus2_ok = rec.waldschmidt() >= row.plus2_rhs;

    report.all_pass = report.all_pass && row.naive_fails && row.multiple3_ok && row.plus2_ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace symcontain

#endif  // SYMCONTAIN_POINTS_HPP
