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

// Acceptance gate: one PASS/FAIL line per criterion, with wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symcontain/symcontain.hpp"

using namespace symcontain;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  std::int64_t limit_ms;  // 0: no limit
  std::function<Outcome()> body;
};

std::vector<MatrixShape> property_shapes() {
  std::vector<MatrixShape> out;
  for (std::int64_t p = 1; p <= 5; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) {
      for (std::int64_t t = 1; t <= q; ++t) out.push_back(MatrixShape::generic(p, q, t));
    }
    for (std::int64_t t = 1; t <= p; ++t) out.push_back(MatrixShape::symmetric(p, t));
  }
  for (std::int64_t p = 2; p <= 10; ++p) {
    for (std::int64_t t = 1; 2 * t <= p; ++t) out.push_back(MatrixShape::pfaffian(p, t));
  }
  return out;
}

std::vector<std::int64_t> random_sizes(const MatrixShape& shape, std::int64_t g_min, std::mt19937_64& rng) {
  std::vector<std::int64_t> sizes;
  std::int64_t g = 0;
  while (g < g_min || rng() % 4 == 0) {
    const auto s = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(shape.max_size()));
    sizes.push_back(s);
    g += shape.contribution(s);
  }
  return sizes;
}

ExponentVector random_star_member(std::size_t n, std::size_t h, std::int64_t k, std::mt19937_64& rng) {
  std::vector<std::int64_t> a(n);
  for (auto& x : a) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k + 3));
  while (!oracle::star_member(a, h, k)) ++a[rng() % n];
  return ExponentVector(a);
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome generic_three_by_three() {
  const auto shape = MatrixShape::generic(3, 3, 2);
  const auto alpha8 = det_alpha(shape, 8);
  const auto omega5 = det_omega(shape, 5);
  const auto h = shape.height();
  const auto rhs = 1 * (h - 1) + 1 * omega5;
  if (alpha8 != 12) return fail("alpha(8) = " + std::to_string(alpha8));
  if (omega5 != 10) return fail("omega(5) = " + std::to_string(omega5));
  if (h != 4 || rhs != 13 || !(alpha8 < rhs)) return fail("inequality 12 < 13 not reproduced");
  return {true, "alpha(8)=12 < 13 = 3 + omega(5)"};
}

Outcome binomial_region() {
  std::size_t checked = 0;
  for (std::uint64_t N = 3; N <= 6; ++N) {
    for (std::uint64_t m = 1; m <= 5; ++m) {
      for (std::uint64_t k = 2 * m + 2; k <= 2 * m + 14; ++k, ++checked) {
        if (!binomial_inequality_holds(N, m, k)) return fail("fails at N=" + std::to_string(N) + " m=" + std::to_string(m));
      }
    }
  }
  if (binomial_inequality_holds(3, 1, 3)) return fail("holds at (3,1,3)");
  if (binomial(8, 3) != 56 || power(BigInt(4), 3) * binomial(3, 3) != 64) return fail("56 < 64 not reproduced");
  return {true, std::to_string(checked) + " triples; (3,1,3) fails 56 < 64"};
}

Outcome general_points_pipeline() {
  const auto cert = certify_demailly_general_points(3, 1, BigInt(64));
  if (!cert.granted) return fail("not granted");
  if (cert.k != 4 || cert.w != 6 || cert.r_threshold != 3) return fail("k/w/r_threshold mismatch");
  if (!verify_general_points_certificate(cert)) return fail("certificate does not re-verify");
  const auto thr = containment_threshold(3, 1, BigInt(64));
  const auto at2 = threshold_trace(3, 1, thr, 2).front();
  if (at2.lhs != 16 || at2.rhs != 18 || at2.holds()) return fail("r=2 check is not 16 < 18");
  return {true, "k=4 w=6 r=3; r=2 gives 16 < 18"};
}

Outcome fermat_registry() {
  for (std::int64_t n : {3, 4, 5}) {
    const auto rep = fermat_checks(n, 10);
    for (const auto& row : rep.rows) {
      const BigInt display_rhs = 3 + 3 * BigInt(row.k) * n * (n + 1);
      if (!(row.naive_lhs < display_rhs) || row.naive_rhs != display_rhs) return fail("display fails at n=" + std::to_string(n));
    }
    if (!rep.all_pass) return fail("Demailly checks fail at n=" + std::to_string(n));
  }
  return {true, "n in {3,4,5}, k <= 10"};
}

Outcome star_soundness() {
  std::mt19937_64 rng(20260101);
  std::size_t cases = 0, rejected = 0;
  for (; cases < 12000; ++cases) {
    const std::size_t n = 1 + rng() % 7;
    const std::size_t h = 1 + rng() % std::min<std::size_t>(n, 4);
    std::vector<std::int64_t> deg(n);
    for (auto& d : deg) d = 1 + static_cast<std::int64_t>(rng() % 3);
    const StarConfig cfg(n, h, deg);
    const std::int64_t m = 1 + rng() % 4, r = 1 + rng() % 4, c = 1 + rng() % 4;
    const auto hh = static_cast<std::int64_t>(h);
    const auto a = random_star_member(n, h, r * (m + hh - 1) - hh + c, rng);
    const auto cert = star_certify_containment(cfg, a, m, r, c);
    if (!star_verify_certificate(cert)) return fail("valid certificate rejected");

    auto bad = cert;
    switch (rng() % 4) {
      case 0: bad.leftover_degree -= 1; break;
      case 1: {
        const std::size_t j = rng() % n;
        bad.base = bad.base.with_entry(j, bad.base[j] + 1);
        break;
      }
      case 2: bad.m += 1; break;
      default: bad.tight_subset.back() = n; break;
    }
    if (star_verify_certificate(bad)) return fail("mutated certificate accepted");
    ++rejected;
  }
  return {true, std::to_string(cases) + " cases, " + std::to_string(rejected) + " mutants rejected"};
}

Outcome det_soundness() {
  std::mt19937_64 rng(20260202);
  const auto shapes = property_shapes();
  const auto pairing_shape = MatrixShape::symmetric(3, 2);
  std::size_t cases = 0, pairing = 0, skipped = 0;
  while (cases < 12000) {
    const bool force_pairing = rng() % 10 == 0;
    const auto& shape = force_pairing ? pairing_shape : shapes[rng() % shapes.size()];
    const std::int64_t m = 1 + rng() % 4, c = 1 + rng() % 4;
    const std::int64_t r = force_pairing ? 2 : 1 + static_cast<std::int64_t>(rng() % 4);
    const auto mode = force_pairing || rng() % 2 ? ContainmentMode::general : ContainmentMode::basic;
    if (!detail::det_groups_fit(shape, mode, r, c)) {
      ++skipped;
      continue;
    }
    const auto power = detail::det_containment_power(shape, mode, m, r, c);
    const SizeMultiset sizes(shape, random_sizes(shape, power, rng));
    const auto cert = det_certify_containment(shape, sizes, m, r, c, mode);
    if (!det_verify_certificate(cert)) return fail("valid certificate rejected");
    const auto h = shape.height();
    const auto need = mode == ContainmentMode::basic ? r * (h - 1) : (r - 1) * (h - 1) + c - 1;
    if (cert.madic_budget < need) return fail("budget below requirement");
    if (cert.construction == DetConstruction::symmetric_pairing) ++pairing;
    auto bad = cert;
    bad.madic_budget += 1;
    if (det_verify_certificate(bad)) return fail("mutated certificate accepted");
    ++cases;
  }
  if (pairing == 0) return fail("symmetric pairing path never taken");
  return {true, std::to_string(cases) + " cases, " + std::to_string(pairing) + " via symmetric pairing, " +
                    std::to_string(skipped) + " infeasible parameter draws skipped"};
}

Outcome els_containment() {
  std::mt19937_64 rng(20260303);
  std::size_t star_cases = 0, det_cases = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t h = 1; h <= std::min<std::size_t>(n, 4); ++h) {
      const StarConfig cfg(n, h);
      const auto hh = static_cast<std::int64_t>(h);
      for (std::int64_t t = 1; t <= 3; ++t) {
        for (std::int64_t k = 1; k <= 3; ++k) {
          for (int rep = 0; rep < 10; ++rep, ++star_cases) {
            const auto a = random_star_member(n, h, t * (hh + k), rng);
            if (!star_verify_certificate(star_certify_containment(cfg, a, k + 1, t, hh))) return fail("star");
          }
        }
      }
    }
  }
  for (const auto& shape : property_shapes()) {
    const auto h = shape.height();
    for (std::int64_t t = 1; t <= 3; ++t) {
      for (std::int64_t k = 1; k <= 3; ++k) {
        for (int rep = 0; rep < 10; ++rep, ++det_cases) {
          const SizeMultiset sizes(shape, random_sizes(shape, t * (h + k), rng));
          if (!det_verify_certificate(det_certify_containment(shape, sizes, k + 1, t, 0, ContainmentMode::basic))) {
            return fail("det");
          }
        }
      }
    }
  }
  return {true, std::to_string(star_cases) + " star, " + std::to_string(det_cases) + " determinantal, 0 failures"};
}

Outcome oracle_equivalence() {
  std::size_t vectors = 0, configs = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t h = 1; h <= std::min<std::size_t>(n, 3); ++h) {
      for (std::int64_t k = 1; k <= 6; ++k, ++configs) {
        const auto rep = crosscheck_star(n, h, k, 12);
        if (!rep.ok()) {
          return fail("mismatch at n=" + std::to_string(n) + " h=" + std::to_string(h) + " k=" + std::to_string(k));
        }
        vectors += rep.vectors_checked;
      }
    }
  }
  return {true, std::to_string(configs) + " configurations, " + std::to_string(vectors) + " vectors, 0 mismatches"};
}

Outcome demailly_like() {
  std::size_t comparisons = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t h = 1; h <= std::min<std::size_t>(n, 4); ++h) {
      const StarConfig cfg(n, h);
      const auto hh = static_cast<std::int64_t>(h);
      for (std::int64_t m = 1; m <= 12; ++m) {
        const auto rhs = make_rational(star_alpha(cfg, m) + hh - 1, m + hh - 1);
        for (std::int64_t np = 1; np <= 12; ++np, ++comparisons) {
          if (make_rational(star_alpha(cfg, np), np) < rhs) return fail("star violation");
        }
      }
    }
  }
  for (const auto& shape : property_shapes()) {
    for (std::int64_t m = 1; m <= 12; ++m) {
      const auto rep = det_demailly_check(shape, m, 12);
      comparisons += rep.rows.size();
      if (!rep.all_pass) return fail("determinantal violation");
    }
  }
  return {true, std::to_string(comparisons) + " comparisons, 0 violations"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "generic 3x3 2-minors: alpha, omega and the strict inequality", 1000, generic_three_by_three},
      {2, "binomial inequality region and its first failure", 10000, binomial_region},
      {3, "general-points pipeline at N=3, m=1, s=64", 1000, general_points_pipeline},
      {4, "Fermat-type registry checks", 1000, fermat_registry},
      {5, "star certificate soundness and tamper rejection", 60000, star_soundness},
      {6, "determinantal certificate soundness, both modes", 60000, det_soundness},
      {7, "ELS-type containment in both engines", 0, els_containment},
      {8, "monomial oracle equivalence", 120000, oracle_equivalence},
      {9, "Demailly-like bound in both engines", 0, demailly_like},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && c.limit_ms > 0 && ms >= c.limit_ms) out = fail("over time limit " + std::to_string(c.limit_ms) + " ms");
    failures += out.ok ? 0 : 1;
    std::printf("[%s] %d. %s (%lld ms): %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, static_cast<long long>(ms),
                out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
