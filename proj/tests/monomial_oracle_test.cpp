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

#include <gtest/gtest.h>

#include <random>

#include "symcontain/monomial_ideal.hpp"

using namespace symcontain;

namespace {
using Gens = std::vector<ExponentVector>;
MonomialIdeal ideal(std::size_t n, Gens g) { return MonomialIdeal(n, std::move(g)); }
}  // namespace

TEST(MonomialIdeal, Minimalization) {
  const auto a = ideal(2, {{2, 0}, {1, 1}, {2, 1}, {1, 1}});
  EXPECT_EQ(a.gens(), (Gens{{1, 1}, {2, 0}}));
  EXPECT_THROW(ideal(2, {{1, 1, 1}}), invalid_input);
}

TEST(MonomialIdeal, Intersect) {
  EXPECT_EQ(mi_intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})).gens(), (Gens{{1, 1}}));
  const auto a = ideal(2, {{2, 0}, {1, 1}});
  EXPECT_EQ(mi_intersect(a, a), a);
  EXPECT_EQ(mi_intersect(a, ideal(2, {{0, 1}})).gens(), (Gens{{1, 1}}));
  EXPECT_THROW(mi_intersect(a, ideal(3, {{0, 1, 0}})), invalid_input);
}

TEST(MonomialIdeal, Power) {
  const auto xy = MonomialIdeal::variables(2, {0, 1});
  EXPECT_EQ(mi_power(xy, 2).gens(), (Gens{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(mi_power(xy, 1), xy);
  EXPECT_EQ(mi_power(xy, 0), MonomialIdeal::unit(2));
  const auto a = ideal(2, {{1, 0}, {0, 2}});
  EXPECT_EQ(mi_power(a, 3).gens(), (Gens{{0, 6}, {1, 4}, {2, 2}, {3, 0}}));
}

TEST(MonomialIdeal, CoordinateStar) {
  EXPECT_EQ(coordinate_star_symbolic(3, 2, 1).gens(), (Gens{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(coordinate_star_symbolic(3, 3, 2), mi_power(MonomialIdeal::variables(3, {0, 1, 2}), 2));
  const auto i = coordinate_star_symbolic(3, 2, 2);
  EXPECT_EQ(mi_alpha(i), 3);
  EXPECT_TRUE(mi_member(i, ExponentVector({1, 1, 1})));
  EXPECT_FALSE(mi_member(i, ExponentVector({2, 1, 0})));
  EXPECT_TRUE(mi_member(MonomialIdeal::unit(3), ExponentVector({0, 0, 0})));
  EXPECT_THROW(mi_member(i, ExponentVector({1, 1})), invalid_input);
}

TEST(MonomialIdeal, AlgebraicLaws) {
  std::mt19937_64 rng(61);
  auto random_ideal = [&](std::size_t n) {
    Gens g;
    const auto count = 1 + rng() % 4;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<std::int64_t> v(n);
      for (auto& x : v) x = static_cast<std::int64_t>(rng() % 4);
      g.emplace_back(v);
    }
    return g;
  };
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 3;
    auto ga = random_ideal(n);
    const auto a = MonomialIdeal(n, ga);
    std::shuffle(ga.begin(), ga.end(), rng);
    EXPECT_EQ(MonomialIdeal(n, ga), a);
    EXPECT_EQ(MonomialIdeal(n, a.gens()), a);
    const auto b = MonomialIdeal(n, random_ideal(n));
    const auto c = MonomialIdeal(n, random_ideal(n));
    EXPECT_EQ(mi_intersect(a, b), mi_intersect(b, a));
    EXPECT_EQ(mi_intersect(mi_intersect(a, b), c), mi_intersect(a, mi_intersect(b, c)));
    EXPECT_EQ(mi_intersect(a, a), a);
    const std::int64_t j = static_cast<std::int64_t>(rng() % 3), k = static_cast<std::int64_t>(rng() % 3);
    EXPECT_EQ(mi_product(mi_power(a, j), mi_power(a, k)), mi_power(a, j + k));
  }
}

TEST(Crosscheck, Examples) {
  for (auto [n, h, k, d] : {std::tuple{4, 2, 3, 10}, {3, 3, 4, 8}, {5, 3, 2, 8}}) {
    const auto rep = crosscheck_star(n, h, k, d);
    EXPECT_TRUE(rep.ok()) << n << h << k;
    EXPECT_EQ(rep.vectors_checked, static_cast<std::size_t>(binomial(n + d, n)));
  }
}

TEST(Crosscheck, RefusesOverBudget) { EXPECT_THROW(crosscheck_star(10, 2, 2, 20), refused); }
