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

#include "tdepth/anf.hpp"

#include <algorithm>
#include <bit>

#include "tdepth/errors.hpp"

namespace tdepth {

Monomial Monomial::from_mask(std::uint64_t mask) {
  if (mask == 0) {
    throw DomainError("monomial must contain at least one variable");
  }
  return Monomial(mask);
}

Monomial Monomial::from_vars(std::span<const int> vars) {
  std::uint64_t mask = 0;
  for (int v : vars) {
    if (v < 0 || v >= kMaxArity) {
      throw DomainError("variable index out of range: " + std::to_string(v));
    }
    mask |= std::uint64_t{1} << v;
  }
  return from_mask(mask);
}

Monomial Monomial::variable(int var) {
  const int vars[] = {var};
  return from_vars(vars);
}

int Monomial::degree() const { return std::popcount(mask_); }

int Monomial::span() const { return 64 - std::countl_zero(mask_); }

std::vector<int> Monomial::vars() const {
  std::vector<int> out;
  out.reserve(degree());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::strong_ordering operator<=>(Monomial a, Monomial b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Same cardinality: the first differing variable decides.
  std::uint64_t x = a.mask_, y = b.mask_;
  while (x != 0) {
    const int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i <=> j;
    x &= x - 1;
    y &= y - 1;
  }
  return std::strong_ordering::equal;
}

std::string to_string(Monomial m) {
  std::string out;
  for (int v : m.vars()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(v);
  }
  return out;
}

BooleanFunction::BooleanFunction(int n, bool constant,
                                 std::vector<Monomial> monomials)
    : n_(n), constant_(constant) {
  if (n < 1 || n > kMaxArity) {
    throw DomainError("arity must be in [1, 64], got " + std::to_string(n));
  }
  std::sort(monomials.begin(), monomials.end());
  monomials_.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) monomials_.push_back(monomials[i]);
    i = j;
  }
  for (Monomial m : monomials_) {
    if (m.span() > n) {
      throw DomainError("monomial " + to_string(m) +
                        " uses a variable outside arity " + std::to_string(n));
    }
  }
}

bool BooleanFunction::operator()(std::uint64_t x) const {
  bool value = constant_;
  for (Monomial m : monomials_) value ^= m.evaluate(x);
  return value;
}

TruthTable BooleanFunction::truth_table() const {
  return truth_table_from_anf(*this);
}

MultiOutputFunction::MultiOutputFunction(
    std::vector<BooleanFunction> coordinates)
    : coords_(std::move(coordinates)) {
  if (coords_.empty()) {
    throw DomainError("a multi-output function needs at least one coordinate");
  }
  if (coords_.size() > static_cast<std::size_t>(kMaxOutputs)) {
    throw DomainError("at most 64 output coordinates are supported");
  }
  n_ = coords_.front().arity();
  for (const auto& c : coords_) {
    if (c.arity() != n_) {
      throw DomainError("coordinate arities differ");
    }
  }
}

void moebius_transform(std::span<std::uint8_t> bits) {
  const std::size_t size = bits.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw FormatError("truth table length " + std::to_string(size) +
                      " is not a power of two");
  }
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        bits[i + half] ^= bits[i];
      }
    }
  }
}

namespace {

int arity_of_length(std::size_t size) {
  if (size < 2 || !std::has_single_bit(size)) {
    throw FormatError("truth table length " + std::to_string(size) +
                      " is not a power of two >= 2");
  }
  const int n = std::countr_zero(size);
  if (n > kMaxTableArity) {
    throw DomainError("truth tables are limited to 2^24 entries");
  }
  return n;
}

}  // namespace

BooleanFunction anf_from_truth_table(std::span<const std::uint8_t> table) {
  const int n = arity_of_length(table.size());
  TruthTable coeffs(table.begin(), table.end());
  for (auto& b : coeffs) {
    if (b > 1) throw FormatError("truth table entries must be 0 or 1");
  }
  moebius_transform(coeffs);
  std::vector<Monomial> monomials;
  for (std::size_t mask = 1; mask < coeffs.size(); ++mask) {
    if (coeffs[mask]) monomials.push_back(Monomial::from_mask(mask));
  }
  return BooleanFunction(n, coeffs[0] != 0, std::move(monomials));
}

TruthTable truth_table_from_anf(const BooleanFunction& f) {
  if (f.arity() > kMaxTableArity) {
    throw DomainError("arity " + std::to_string(f.arity()) +
                      " exceeds the dense truth-table limit");
  }
  TruthTable bits(std::size_t{1} << f.arity(), 0);
  bits[0] = f.constant_term();
  for (Monomial m : f.monomials()) bits[m.mask()] = 1;
  moebius_transform(bits);
  return bits;
}

MultiOutputFunction from_lookup_table(std::span<const std::uint64_t> table,
                                      int outputs) {
  if (outputs < 1 || outputs > kMaxOutputs) {
    throw DomainError("output count must be in [1, 64]");
  }
  arity_of_length(table.size());
  std::vector<BooleanFunction> coords;
  TruthTable column(table.size());
  for (int j = 0; j < outputs; ++j) {
    for (std::size_t x = 0; x < table.size(); ++x) {
      column[x] = (table[x] >> j) & 1u;
    }
    coords.push_back(anf_from_truth_table(column));
  }
  return MultiOutputFunction(std::move(coords));
}

int degree(const BooleanFunction& f) {
  // Monomials are sorted by degree, so the last one is the largest.
  return f.monomials().empty() ? 0 : f.monomials().back().degree();
}

int degree(const MultiOutputFunction& f) {
  int d = 0;
  for (const auto& c : f.coordinates()) d = std::max(d, degree(c));
  return d;
}

std::uint64_t evaluate(const MultiOutputFunction& f, std::uint64_t x) {
  std::uint64_t out = 0;
  for (int j = 0; j < f.outputs(); ++j) {
    out |= std::uint64_t{f.coordinate(j)(x)} << j;
  }
  return out;
}

std::vector<Monomial> nonlinear_monomials(const MultiOutputFunction& f) {
  std::vector<Monomial> all;
  for (const auto& c : f.coordinates()) {
    for (Monomial m : c.monomials()) {
      if (m.degree() >= 2) all.push_back(m);
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

MonomialCensus monomial_census(const MultiOutputFunction& f) {
  MonomialCensus census;
  census.distinct_nonlinear = nonlinear_monomials(f).size();
  census.degree = degree(f);
  for (const auto& c : f.coordinates()) {
    census.per_coordinate.push_back(c.term_count());
    census.total_terms += c.term_count();
    census.max_terms = std::max(census.max_terms, c.term_count());
  }
  return census;
}

}  // namespace tdepth
