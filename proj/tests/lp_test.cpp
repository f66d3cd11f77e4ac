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

#include "symcontain/core.hpp"
#include "symcontain/rational_lp.hpp"

using namespace symcontain;

namespace {
BigRational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }
}  // namespace

TEST(PackingSimplex, TwoVariableOptimum) {
  // max y0 + y1  s.t.  y0 + 2 y1 <= 4, 3 y0 + y1 <= 6.
  PackingSimplex<BigRational> lp({{q(1), q(2)}, {q(3), q(1)}}, {q(4), q(6)}, {q(1), q(1)});
  const auto sol = lp.solve();
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->value, q(14, 5));
  EXPECT_EQ(sol->primal[0], q(8, 5));
  EXPECT_EQ(sol->primal[1], q(6, 5));
  EXPECT_EQ(sol->dual[0], q(2, 5));
  EXPECT_EQ(sol->dual[1], q(1, 5));
}

TEST(PackingSimplex, StrongDuality) {
  PackingSimplex<BigRational> lp({{q(2), q(1), q(1)}, {q(1), q(3), q(2)}, {q(2), q(1), q(3)}}, {q(5), q(7), q(6)},
                                 {q(3), q(2), q(4)});
  const auto sol = lp.solve();
  ASSERT_TRUE(sol);
  const BigRational dual_obj = 5 * sol->dual[0] + 7 * sol->dual[1] + 6 * sol->dual[2];
  EXPECT_EQ(sol->value, dual_obj);
}

TEST(PackingSimplex, Unbounded) {
  PackingSimplex<BigRational> lp({{q(1), q(-1)}}, {q(1)}, {q(0), q(1)});
  EXPECT_FALSE(lp.solve());
}

TEST(PackingSimplex, ZeroRightHandSideDegenerate) {
  PackingSimplex<BigRational> lp({{q(1), q(1)}, {q(1), q(0)}}, {q(0), q(1)}, {q(1), q(1)});
  const auto sol = lp.solve();
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->value, q(0));
}
