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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tdepth {

/// Dense truth tables are capped at 2^24 entries per coordinate.
inline constexpr int kMaxTableArity = 24;
/// Monomials are stored as 64-bit variable masks.
inline constexpr int kMaxArity = 64;
inline constexpr int kMaxOutputs = 64;

/// One bit per entry. Index i encodes the input point with x0 in bit 0.
using TruthTable = std::vector<std::uint8_t>;

/// A non-empty product of distinct variables x_i, i in [0, 64).
///
/// Ordering is by degree first, then lexicographic on the sorted index
/// list, so {x0x1, x0x2, x1x2, x0x1x2} is already sorted.
class Monomial {
 public:
  static Monomial from_mask(std::uint64_t mask);
  static Monomial from_vars(std::span<const int> vars);
  static Monomial variable(int var);

  std::uint64_t mask() const { return mask_; }
  int degree() const;
  std::vector<int> vars() const;
  bool contains(int var) const { return (mask_ >> var) & 1u; }
  /// 1 + the highest variable index.
  int span() const;
  bool evaluate(std::uint64_t x) const { return (x & mask_) == mask_; }

  friend bool operator==(Monomial, Monomial) = default;
  friend std::strong_ordering operator<=>(Monomial a, Monomial b);

 private:
  explicit Monomial(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_;
};

std::string to_string(Monomial m);

/// A single-output Boolean function held in canonical ANF: a constant bit
/// plus a sorted, duplicate-free list of monomials. The truth table is
/// derived on demand, so both views agree by construction.
class BooleanFunction {
 public:
  /// Duplicate monomials cancel in pairs (GF(2) addition).
  BooleanFunction(int n, bool constant, std::vector<Monomial> monomials);

  static BooleanFunction zero(int n) { return {n, false, {}}; }

  int arity() const { return n_; }
  bool constant_term() const { return constant_; }
  std::span<const Monomial> monomials() const { return monomials_; }
  /// Nonconstant terms (linear and nonlinear).
  std::size_t term_count() const { return monomials_.size(); }

  bool operator()(std::uint64_t x) const;
  /// Requires arity() <= kMaxTableArity.
  TruthTable truth_table() const;

  friend bool operator==(const BooleanFunction&,
                         const BooleanFunction&) = default;

 private:
  int n_;
  bool constant_;
  std::vector<Monomial> monomials_;
};

/// f : F_2^n -> F_2^m as m coordinate functions over shared inputs.
class MultiOutputFunction {
 public:
  explicit MultiOutputFunction(std::vector<BooleanFunction> coordinates);

  int arity() const { return n_; }
  int outputs() const { return static_cast<int>(coords_.size()); }
  const BooleanFunction& coordinate(int j) const { return coords_.at(j); }
  std::span<const BooleanFunction> coordinates() const { return coords_; }

  friend bool operator==(const MultiOutputFunction&,
                         const MultiOutputFunction&) = default;

 private:
  int n_;
  std::vector<BooleanFunction> coords_;
};

/// In-place binary Moebius transform over GF(2). Maps a truth table to ANF
/// coefficients indexed by variable mask, and back (it is an involution).
void moebius_transform(std::span<std::uint8_t> bits);

BooleanFunction anf_from_truth_table(std::span<const std::uint8_t> table);
TruthTable truth_table_from_anf(const BooleanFunction& f);

/// Builds a multi-output function from a lookup table: entry x holds f(x)
/// with coordinate j in bit j.
MultiOutputFunction from_lookup_table(std::span<const std::uint64_t> table,
                                      int outputs);

int degree(const BooleanFunction& f);
int degree(const MultiOutputFunction& f);

/// Coordinate j of the result is bit j.
std::uint64_t evaluate(const MultiOutputFunction& f, std::uint64_t x);

struct MonomialCensus {
  std::size_t distinct_nonlinear = 0;
  std::size_t total_terms = 0;
  std::size_t max_terms = 0;
  int degree = 0;
  std::vector<std::size_t> per_coordinate;

  friend bool operator==(const MonomialCensus&,
                         const MonomialCensus&) = default;
};

MonomialCensus monomial_census(const MultiOutputFunction& f);

/// Union of the degree >= 2 monomials over all coordinates, sorted.
std::vector<Monomial> nonlinear_monomials(const MultiOutputFunction& f);

// Text formats ------------------------------------------------------------

MultiOutputFunction parse_anf(std::string_view text);
/// Canonical form: a "vars n" header, then one coordinate per line with the
/// constant first and monomials in Monomial order.
std::string serialize_anf(const MultiOutputFunction& f);

/// Accepts one binary string (2^n chars) or "0x"-prefixed hex string
/// (2^n/4 digits) per coordinate, or a "vars n outs m" header followed by
/// 2^n integers.
MultiOutputFunction parse_truth_tables(std::string_view text);
std::string serialize_truth_tables(const MultiOutputFunction& f);

}  // namespace tdepth
