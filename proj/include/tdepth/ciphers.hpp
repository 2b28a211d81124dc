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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tdepth/anf.hpp"
#include "tdepth/decomp.hpp"
#include "tdepth/estimate.hpp"

namespace tdepth {

/// The 3-bit LowMC S-box:
///   f0 = x0 + x1x2,  f1 = x0 + x1 + x0x2,  f2 = x0 + x1 + x2 + x0x1.
MultiOutputFunction lowmc_sbox();

/// The FIPS-197 forward S-box lookup table.
std::span<const std::uint8_t, 256> aes_sbox_table();

/// ANF of the AES S-box derived from the lookup table; the monomial census
/// (246, 1001, 145, degree 7) is checked and IntegrityError raised if off.
MultiOutputFunction aes_sbox();

struct AesParameters {
  int key_bits = 128;
  int rounds = 10;

  /// 128 -> 10, 192 -> 12, 256 -> 14 rounds; anything else is a DomainError.
  static AesParameters for_key_bits(int key_bits);
};

inline constexpr std::array<int, 3> kAesKeySizes{128, 192, 256};

/// Column order follows the tables: ancilla, CNOT, CNOT depth, T, T depth.
/// A CNOT depth of kNotAvailable marks a value the source did not report.
inline constexpr Wide kNotAvailable = -1;

struct CostRecord {
  Wide ancilla = 0;
  Wide cnot_count = 0;
  Wide cnot_depth = 0;
  Wide t_count = 0;
  Wide t_depth = 0;

  friend bool operator==(const CostRecord&, const CostRecord&) = default;
};

CostRecord to_cost_record(const ResourceBounds& b);

struct RoundCosts {
  CostRecord subbytes;     // 16 parallel S-boxes
  CostRecord mixcolumns;   // 4 x 98 CNOT, depth 13, in place
  CostRecord addroundkey;  // 128 CNOT, depth 1
  CostRecord shiftrows;    // rewiring only

  /// Counts add; depths add across the sequential steps; ancilla and T
  /// depth come from the S-box layer alone.
  CostRecord total() const;
};

/// Single S-box estimate.
CostRecord aes_sbox_costs(ToffoliVariant v);
RoundCosts aes_round_costs(ToffoliVariant v);
/// r rounds, the last without MixColumns; only the 128 S-box output
/// qubits accumulate from round to round.
CostRecord aes_full_costs(AesParameters params, ToffoliVariant v);

// Tables ---------------------------------------------------------------------

enum class RowStatus : std::uint8_t {
  Match,        // computed equals expected
  Mismatch,     // computed differs: a reproduction failure
  Inconsistent, // the expected values disagree with another table; flagged
  Reference,    // literal row from prior work, nothing computed
};

std::string_view to_string(RowStatus s);

struct TableRow {
  std::string label;
  CostRecord computed;
  CostRecord expected;
  RowStatus status = RowStatus::Match;
  std::string note;
};

struct CostTable {
  std::string name;  // sbox, round, aes, compare
  std::string caption;
  std::vector<TableRow> rows;
  std::vector<std::string> notes;

  /// True when no row is a Mismatch (flagged rows do not count).
  bool reproduced() const;
};

CostTable sbox_table();        // one S-box, both variants
CostTable round_table();       // one round, both variants
CostTable aes_table();         // complete cipher per key size
CostTable comparison_table();  // against earlier implementations
CostTable table_by_name(std::string_view name);

std::string render_text(const CostTable& table);
std::string render_json(const CostTable& table);

}  // namespace tdepth
