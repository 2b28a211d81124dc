// Copyright 2026 The tdepth Authors
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

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "tdepth/ciphers.hpp"
#include "tdepth/errors.hpp"
#include "tdepth/estimate.hpp"

namespace tdepth {
namespace {

using testing::binomial;
using testing::ceil_log2;

TEST(ClosedForm, SmallCaseValues) {
  const ResourceBounds b = theorem1_bounds(3, 3);
  EXPECT_EQ(b.ancilla, 23);
  EXPECT_EQ(b.t_count, 20);
  EXPECT_EQ(b.cnot_count, 78);
  EXPECT_EQ(b.cnot_depth, 29);
  EXPECT_EQ(b.t_depth, 2);

  const ResourceBounds one = theorem1_bounds(2, 1);
  EXPECT_EQ(one.t_count, 4);
  EXPECT_EQ(one.t_depth, 1);
  EXPECT_EQ(theorem1_bounds(8, 8).ancilla, 2801);
}

TEST(ClosedForm, RejectsDegenerateShapes) {
  EXPECT_THROW(theorem1_bounds(1, 1), DomainError);
  EXPECT_THROW(theorem1_bounds(3, 0), DomainError);
}

TEST(ClosedForm, ClosedFormsEqualSummationsForBothVariants) {
  for (ToffoliVariant v :
       {ToffoliVariant::TDepthOne, ToffoliVariant::LogicalAnd}) {
    for (int n = 2; n <= 16; ++n) {
      for (int m = 1; m <= 8; ++m) {
        const ResourceBounds a = theorem1_bounds(n, m, v);
        const ResourceBounds b = summation_bounds(n, m, v);
        ASSERT_EQ(a.ancilla, b.ancilla) << n << "," << m;
        ASSERT_EQ(a.t_count, b.t_count) << n << "," << m;
        ASSERT_EQ(a.t_depth, b.t_depth) << n << "," << m;
        ASSERT_EQ(a.cnot_count, b.cnot_count) << n << "," << m;
        ASSERT_EQ(a.cnot_depth, b.cnot_depth) << n << "," << m;
      }
    }
  }
}

// The summation terms recomputed here from binomials, independently of the
// library's own loops.
TEST(ClosedForm, SummationMatchesBinomialOracle) {
  for (int n = 2; n <= 12; ++n) {
    const int m = 3;
    std::uint64_t copies = 0, storage = 0, mct_anc = 0, t = 0, cnot = 0;
    for (int k = 2; k <= n; ++k) {
      const std::uint64_t c = binomial(n, k);
      copies += k * c;
      storage += c;
      mct_anc += 2 * (k - 1) * c;
      t += 4 * (k - 1) * c;
      cnot += 9 * (k - 1) * c;
    }
    copies -= n;
    const std::uint64_t terms = (std::uint64_t{1} << n) - 1;
    const ResourceBounds b = summation_bounds(n, m);
    EXPECT_EQ(b.ancilla, Wide(copies + storage + mct_anc + m));
    EXPECT_EQ(b.t_count, Wide(t));
    EXPECT_EQ(b.cnot_count, Wide(2 * copies + m * terms + cnot));
    EXPECT_EQ(b.cnot_depth,
              Wide(2 * (n - 1) + terms + 9 * ceil_log2(n)));
  }
}

TEST(ClosedForm, WideArithmeticStaysExactAtLargeN) {
  const ResourceBounds b = theorem1_bounds(60, 4);
  const Wide two59 = Wide(1) << 59;
  EXPECT_EQ(b.t_count, (Wide(1) << 61) * 58 + 4);
  EXPECT_EQ(b.ancilla, two59 * (3 * 60 - 2) - 3 * 60 + 4 + 1);
  EXPECT_EQ(to_string(Wide(1) << 100), "1267650600228229401496703205376");
  EXPECT_EQ(to_string(Wide(-42)), "-42");
}

TEST(FunctionSpecific, AesSboxTableOneColumns) {
  const ResourceBounds a = function_specific_estimate(aes_sbox());
  EXPECT_EQ(a.ancilla, 2778);
  EXPECT_EQ(a.cnot_depth, 186);
  EXPECT_EQ(a.t_count, 3048);
  EXPECT_EQ(a.t_depth, 3);
  // 2*1000 copies + 1009 output terms + 6858 gadget CNOTs.
  EXPECT_EQ(a.cnot_count, 9867);

  const ResourceBounds b =
      function_specific_estimate(aes_sbox(), ToffoliVariant::LogicalAnd);
  EXPECT_EQ(b.ancilla, 2016);
  EXPECT_EQ(b.cnot_depth, 177);
  EXPECT_EQ(b.t_count, 3048);
  EXPECT_EQ(b.t_depth, 4);
  EXPECT_EQ(b.cnot_count, 7581);
}

TEST(FunctionSpecific, NeverExceedsClosedForm) {
  testing::Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 8), m = rng.between(1, 4);
    const MultiOutputFunction f = testing::random_multi(rng, n, m, 0.5);
    const ResourceBounds s = function_specific_estimate(f);
    const ResourceBounds c = theorem1_bounds(n, m);
    EXPECT_LE(s.ancilla, c.ancilla);
    EXPECT_LE(s.t_count, c.t_count);
    EXPECT_LE(s.cnot_count, c.cnot_count);
    EXPECT_LE(s.cnot_depth, c.cnot_depth);
    EXPECT_LE(s.t_depth, c.t_depth);
  }
}

TEST(FunctionSpecific, CompleteFunctionReachesSummationCounts) {
  for (int n = 2; n <= 8; ++n) {
    const ResourceBounds s = function_specific_estimate(testing::complete_function(n));
    const ResourceBounds c = theorem1_bounds(n, 1);
    EXPECT_EQ(s.ancilla, c.ancilla) << n;
    EXPECT_EQ(s.t_count, c.t_count) << n;
    EXPECT_EQ(s.cnot_count, c.cnot_count) << n;
  }
}

}  // namespace
}  // namespace tdepth
