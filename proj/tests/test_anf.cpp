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
#include "tdepth/anf.hpp"
#include "tdepth/ciphers.hpp"
#include "tdepth/errors.hpp"

namespace tdepth {
namespace {

using testing::Rng;

Monomial mono(std::initializer_list<int> vars) {
  return Monomial::from_vars(std::span<const int>(vars.begin(), vars.size()));
}

TEST(Monomial, OrdersByDegreeThenLexicographically) {
  std::vector<Monomial> v{mono({0, 1, 2}), mono({1, 2}), mono({0, 2}),
                          mono({0, 1}), mono({3}), mono({0})};
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, (std::vector<Monomial>{mono({0}), mono({3}), mono({0, 1}),
                                      mono({0, 2}), mono({1, 2}),
                                      mono({0, 1, 2})}));
}

TEST(Monomial, ReportsDegreeSpanAndValue) {
  const Monomial m = mono({1, 4});
  EXPECT_EQ(m.degree(), 2);
  EXPECT_EQ(m.span(), 5);
  EXPECT_TRUE(m.evaluate(0b10010));
  EXPECT_FALSE(m.evaluate(0b00010));
  EXPECT_EQ(to_string(m), "x1*x4");
}

TEST(BooleanFunction, DuplicateTermsCancelInPairs) {
  const BooleanFunction f(2, false, {mono({0}), mono({0}), mono({0, 1})});
  EXPECT_EQ(f.term_count(), 1u);
  EXPECT_EQ(f.monomials()[0], mono({0, 1}));
}

TEST(BooleanFunction, RejectsVariablesBeyondArity) {
  EXPECT_THROW(BooleanFunction(2, false, {mono({2})}), DomainError);
}

TEST(Moebius, MatchesSubsetSumOracleExhaustivelyForSmallN) {
  for (int n = 0; n <= 4; ++n) {
    const std::size_t size = std::size_t{1} << n;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << size); ++bits) {
      std::vector<std::uint8_t> table(size);
      for (std::size_t x = 0; x < size; ++x) table[x] = (bits >> x) & 1;
      std::vector<std::uint8_t> coeff = table;
      moebius_transform(coeff);
      ASSERT_EQ(coeff, testing::anf_coefficients_by_subsets(table))
          << "n=" << n << " table=" << bits;
    }
  }
}

TEST(Moebius, IsAnInvolution) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint8_t> table(std::size_t{1} << rng.between(0, 10));
    for (auto& b : table) b = rng.coin();
    std::vector<std::uint8_t> twice = table;
    moebius_transform(twice);
    moebius_transform(twice);
    EXPECT_EQ(twice, table);
  }
}

TEST(Moebius, RejectsLengthsThatAreNotPowersOfTwo) {
  std::vector<std::uint8_t> bad(6);
  EXPECT_THROW(moebius_transform(bad), FormatError);
}

// Round trips ---------------------------------------------------------------

TEST(RoundTrip, TruthTableToAnfIsExhaustiveForNUpTo4) {
  for (int n = 1; n <= 4; ++n) {
    const std::size_t size = std::size_t{1} << n;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << size); ++bits) {
      TruthTable table(size);
      for (std::size_t x = 0; x < size; ++x) table[x] = (bits >> x) & 1;
      const BooleanFunction f = anf_from_truth_table(table);
      ASSERT_EQ(truth_table_from_anf(f), table);
      for (std::size_t x = 0; x < size; ++x) {
        ASSERT_EQ(testing::anf_value(f, x), table[x] != 0);
      }
    }
  }
}

TEST(RoundTrip, AnfToTruthTableRandomisedForNUpTo10) {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.between(1, 10);
    const BooleanFunction f =
        testing::random_function(rng, n, rng.coin() ? 0.05 : 0.5);
    const TruthTable t = truth_table_from_anf(f);
    ASSERT_EQ(anf_from_truth_table(t), f);
    const std::uint64_t x = rng.next() & ((std::uint64_t{1} << n) - 1);
    ASSERT_EQ(t[x] != 0, testing::anf_value(f, x));
  }
}

TEST(RoundTrip, TextSerialisationIsCanonicalAndLossless) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiOutputFunction f =
        testing::random_multi(rng, rng.between(1, 7), rng.between(1, 4), 0.3);
    const std::string text = serialize_anf(f);
    const MultiOutputFunction back = parse_anf(text);
    ASSERT_EQ(back, f) << text;
    ASSERT_EQ(serialize_anf(back), text);
    ASSERT_EQ(parse_truth_tables(serialize_truth_tables(f)), f);
  }
}

// Parsing -------------------------------------------------------------------

TEST(ParseAnf, ReadsExampleTwo) {
  const MultiOutputFunction f = parse_anf("x0*x2 + x1*x3 + x0*x1*x2*x3");
  ASSERT_EQ(f.arity(), 4);
  ASSERT_EQ(f.outputs(), 1);
  EXPECT_EQ(degree(f), 4);
  EXPECT_EQ(evaluate(f, 0b1111), 1u);
  EXPECT_EQ(evaluate(f, 0b0101), 1u);
  EXPECT_EQ(evaluate(f, 0b0011), 0u);
}

TEST(ParseAnf, HandlesConstantsCancellationAndHeaders) {
  EXPECT_EQ(degree(parse_anf("1")), 0);
  EXPECT_EQ(evaluate(parse_anf("1"), 0), 1u);
  const MultiOutputFunction zero = parse_anf("x0 + x0");
  EXPECT_EQ(zero.coordinate(0).term_count(), 0u);
  EXPECT_FALSE(zero.coordinate(0).constant_term());
  EXPECT_EQ(parse_anf("vars 6\nx0").arity(), 6);
  EXPECT_EQ(parse_anf("x0 ⊕ x1*x2").coordinate(0).term_count(), 2u);
}

TEST(ParseAnf, ReportsLineAndColumnOnSyntaxErrors) {
  try {
    parse_anf("x0 + x1\nx0 + + x2");
    FAIL() << "expected a FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 1u);
  }
  EXPECT_THROW(parse_anf("vars 2\nx0 + x2"), FormatError);
  EXPECT_THROW(parse_anf("x0 + y1"), FormatError);
  EXPECT_THROW(parse_anf("x0x1"), FormatError);  // products need '*'

}

TEST(ParseTruthTables, AcceptsBinaryHexAndIntegerForms) {
  const MultiOutputFunction bin = parse_truth_tables("0001");
  EXPECT_EQ(bin.coordinate(0), parse_anf("x0*x1").coordinate(0));
  // Hex is big-endian over the table: bit i of the number is f(i).
  const MultiOutputFunction hex = parse_truth_tables("0x8");
  EXPECT_EQ(hex.coordinate(0), bin.coordinate(0));
  const MultiOutputFunction ints = parse_truth_tables("vars 2 outs 2\n0 1 2 3");
  EXPECT_EQ(evaluate(ints, 2), 2u);
  EXPECT_THROW(parse_truth_tables("011"), FormatError);
}

// Census --------------------------------------------------------------------

TEST(Census, LowMcCountsTermsPerCoordinate) {
  const MonomialCensus c = monomial_census(lowmc_sbox());
  EXPECT_EQ(c.distinct_nonlinear, 3u);
  EXPECT_EQ(c.per_coordinate, (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(c.total_terms, 9u);
  EXPECT_EQ(c.max_terms, 4u);
  EXPECT_EQ(c.degree, 2);
}

TEST(Census, ConstantFunctionIsEmpty) {
  const MonomialCensus c = monomial_census(parse_anf("1"));
  EXPECT_EQ(c.distinct_nonlinear, 0u);
  EXPECT_EQ(c.total_terms, 0u);
  EXPECT_EQ(c.max_terms, 0u);
  EXPECT_EQ(c.degree, 0);
}

TEST(Evaluate, AgreesWithTruthTables) {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiOutputFunction f =
        testing::random_multi(rng, rng.between(1, 8), rng.between(1, 5), 0.4);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.arity()); ++x) {
      std::uint64_t want = 0;
      for (int j = 0; j < f.outputs(); ++j) {
        want |= std::uint64_t{testing::anf_value(f.coordinate(j), x)} << j;
      }
      ASSERT_EQ(evaluate(f, x), want);
    }
  }
}

}  // namespace
}  // namespace tdepth
