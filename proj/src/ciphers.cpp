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

#include "tdepth/ciphers.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "tdepth/errors.hpp"

namespace tdepth {
namespace {

constexpr std::array<std::uint8_t, 256> kAesSbox = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b,
    0xfe, 0xd7, 0xab, 0x76, 0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0,
    0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0, 0xb7, 0xfd, 0x93, 0x26,
    0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2,
    0xeb, 0x27, 0xb2, 0x75, 0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0,
    0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84, 0x53, 0xd1, 0x00, 0xed,
    0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f,
    0x50, 0x3c, 0x9f, 0xa8, 0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5,
    0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2, 0xcd, 0x0c, 0x13, 0xec,
    0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14,
    0xde, 0x5e, 0x0b, 0xdb, 0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c,
    0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79, 0xe7, 0xc8, 0x37, 0x6d,
    0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f,
    0x4b, 0xbd, 0x8b, 0x8a, 0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e,
    0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e, 0xe1, 0xf8, 0x98, 0x11,
    0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f,
    0xb0, 0x54, 0xbb, 0x16};

constexpr std::size_t kAesDistinctNonlinear = 246;
// Non-constant ANF terms summed over the eight coordinates. The published
// cost tables were computed with 1001; the lookup table yields 1009.
constexpr std::size_t kAesTotalTerms = 1009;
constexpr std::size_t kPrintedTotalTerms = 1001;
constexpr std::size_t kAesMaxTerms = 145;
constexpr int kAesDegree = 7;

constexpr int kAesSboxesPerRound = 16;
constexpr Wide kMixColumnsCnots = 4 * 98;
constexpr Wide kMixColumnsDepth = 13;
constexpr Wide kAddRoundKeyCnots = 128;
constexpr Wide kAddRoundKeyDepth = 1;
constexpr Wide kStateBits = 128;

Monomial mono(std::initializer_list<int> vars) {
  return Monomial::from_vars(std::span<const int>(vars.begin(), vars.size()));
}

}  // namespace

MultiOutputFunction lowmc_sbox() {
  return MultiOutputFunction({
      BooleanFunction(3, false, {mono({0}), mono({1, 2})}),
      BooleanFunction(3, false, {mono({0}), mono({1}), mono({0, 2})}),
      BooleanFunction(3, false,
                      {mono({0}), mono({1}), mono({2}), mono({0, 1})}),
  });
}

std::span<const std::uint8_t, 256> aes_sbox_table() { return kAesSbox; }

MultiOutputFunction aes_sbox() {
  std::vector<std::uint64_t> table(kAesSbox.begin(), kAesSbox.end());
  MultiOutputFunction f = from_lookup_table(table, 8);
  const MonomialCensus c = monomial_census(f);
  if (c.distinct_nonlinear != kAesDistinctNonlinear ||
      c.total_terms != kAesTotalTerms || c.max_terms != kAesMaxTerms ||
      c.degree != kAesDegree) {
    std::ostringstream msg;
    msg << "AES S-box census (" << c.distinct_nonlinear << ", "
        << c.total_terms << ", " << c.max_terms << ", " << c.degree
        << ") differs from (246, 1009, 145, 7); the embedded table is corrupt";
    throw IntegrityError(msg.str());
  }
  return f;
}

AesParameters AesParameters::for_key_bits(int key_bits) {
  switch (key_bits) {
    case 128: return {128, 10};
    case 192: return {192, 12};
    case 256: return {256, 14};
    default:
      throw DomainError("AES key size must be 128, 192 or 256, got " +
                        std::to_string(key_bits));
  }
}

CostRecord to_cost_record(const ResourceBounds& b) {
  return {b.ancilla, b.cnot_count, b.cnot_depth, b.t_count, b.t_depth};
}

CostRecord RoundCosts::total() const {
  CostRecord t;
  t.ancilla = subbytes.ancilla;
  t.t_depth = subbytes.t_depth;
  for (const CostRecord* part : {&subbytes, &shiftrows, &mixcolumns,
                                 &addroundkey}) {
    t.cnot_count += part->cnot_count;
    t.cnot_depth += part->cnot_depth;
    t.t_count += part->t_count;
  }
  return t;
}

CostRecord aes_sbox_costs(ToffoliVariant v) {
  return to_cost_record(function_specific_estimate(aes_sbox(), v));
}

RoundCosts aes_round_costs(ToffoliVariant v) {
  const CostRecord one = aes_sbox_costs(v);
  RoundCosts r;
  r.subbytes = {one.ancilla * kAesSboxesPerRound,
                one.cnot_count * kAesSboxesPerRound, one.cnot_depth,
                one.t_count * kAesSboxesPerRound, one.t_depth};
  r.mixcolumns = {0, kMixColumnsCnots, kMixColumnsDepth, 0, 0};
  r.addroundkey = {0, kAddRoundKeyCnots, kAddRoundKeyDepth, 0, 0};
  return r;
}

CostRecord aes_full_costs(AesParameters params, ToffoliVariant v) {
  params = AesParameters::for_key_bits(params.key_bits);
  const CostRecord round = aes_round_costs(v).total();
  const Wide r = params.rounds;
  return {round.ancilla + kStateBits * (r - 1),
          round.cnot_count * r - kMixColumnsCnots,
          round.cnot_depth * r - kMixColumnsDepth, round.t_count * r,
          round.t_depth * r};
}

// Tables ---------------------------------------------------------------------

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::Mismatch: return "MISMATCH";
    case RowStatus::Inconsistent: return "flagged";
    case RowStatus::Reference: return "reference";
  }
  return "?";
}

bool CostTable::reproduced() const {
  for (const TableRow& row : rows) {
    if (row.status == RowStatus::Mismatch) return false;
  }
  return true;
}

namespace {

// Rows whose only deviation is the output-XOR CNOTs of the 8 extra S-box
// terms per S-box instance are flagged rather than failed.
TableRow computed_row(std::string label, const CostRecord& computed,
                      const CostRecord& expected, Wide sboxes) {
  TableRow row{std::move(label), computed, expected, RowStatus::Match, ""};
  if (computed == expected) return row;
  CostRecord adjusted = computed;
  const Wide delta =
      Wide(kAesTotalTerms) - Wide(kPrintedTotalTerms);
  adjusted.cnot_count -= delta * sboxes;
  if (adjusted == expected) {
    row.status = RowStatus::Inconsistent;
    row.note = "printed CNOT count assumes " +
               std::to_string(kPrintedTotalTerms) +
               " S-box terms; the lookup table gives " +
               std::to_string(kAesTotalTerms) + " (+" + to_string(delta) +
               " CNOT per S-box, x" + to_string(sboxes) + ")";
  } else {
    row.status = RowStatus::Mismatch;
  }
  return row;
}

constexpr std::array<ToffoliVariant, 2> kVariants{ToffoliVariant::TDepthOne,
                                                  ToffoliVariant::LogicalAnd};

struct PublishedRow {
  int key_bits;
  const char* source;
  CostRecord costs;
};

// Figures reported by earlier implementations, verbatim.
const std::array<PublishedRow, 7> kPriorWork{{
    {128, "Eurocrypt 2020, Table 4", {4244, 284420, kNotAvailable, 54400, 120}},
    {128, "Asiacrypt 2023, Table 13", {3689, 132376, kNotAvailable, 27200, 40}},
    {128, "Asiacrypt 2022, Table 7", {5576, 285393, kNotAvailable, 62400, 30}},
    {192, "Eurocrypt 2020, Table 4", {4564, 321021, kNotAvailable, 60928, 144}},
    {192, "Asiacrypt 2023, Table 13", {3945, 149256, kNotAvailable, 30464, 48}},
    {256, "Eurocrypt 2020, Table 4", {4884, 393534, kNotAvailable, 75072, 168}},
    {256, "Asiacrypt 2023, Table 13", {4457, 187128, kNotAvailable, 38080, 56}},
}};

// The comparison listing's rows for this construction, as printed.
const std::array<PublishedRow, 3> kComparisonPresent{{
    {128, "this construction", {37464, 1441128, 1987, 487680, 30}},
    {192, "this construction", {37480, 1729824, 2387, 585216, 36}},
    {256, "this construction", {37496, 2017736, 2787, 682752, 42}},
}};

const std::array<CostRecord, 2> kSboxExpected{{{2778, 9859, 186, 3048, 3},
                                         {2016, 7573, 177, 3048, 4}}};
const std::array<CostRecord, 2> kRoundExpected{{{44448, 158264, 200, 48768, 3},
                                         {32256, 121688, 191, 48768, 4}}};
const std::array<CostRecord, 3> kAesExpected{{{45600, 1582248, 1987, 487680, 30},
                                         {45856, 1898776, 2387, 585216, 36},
                                         {46112, 2215304, 2787, 682752, 42}}};

std::string variant_label(ToffoliVariant v) {
  return std::string(to_string(v));
}

}  // namespace

CostTable sbox_table() {
  CostTable t{"sbox", "AES S-box, single instance", {}, {}};
  for (std::size_t i = 0; i < kVariants.size(); ++i) {
    t.rows.push_back(computed_row(variant_label(kVariants[i]),
                                  aes_sbox_costs(kVariants[i]), kSboxExpected[i], 1));
  }
  return t;
}

CostTable round_table() {
  CostTable t{"round", "One AES round (16 S-boxes, MixColumns, AddRoundKey)",
              {}, {}};
  for (std::size_t i = 0; i < kVariants.size(); ++i) {
    t.rows.push_back(computed_row(variant_label(kVariants[i]),
                                  aes_round_costs(kVariants[i]).total(),
                                  kRoundExpected[i], kAesSboxesPerRound));
  }
  return t;
}

CostTable aes_table() {
  CostTable t{"aes", "Complete AES, tdepth1 Toffolis", {}, {}};
  for (std::size_t i = 0; i < kAesKeySizes.size(); ++i) {
    const AesParameters p = AesParameters::for_key_bits(kAesKeySizes[i]);
    t.rows.push_back(computed_row(
        "AES-" + std::to_string(p.key_bits) + " (" + std::to_string(p.rounds) +
            " rounds)",
        aes_full_costs(p, ToffoliVariant::TDepthOne), kAesExpected[i],
        Wide(kAesSboxesPerRound) * p.rounds));
  }
  t.notes.push_back(
      "the accompanying prose quotes T depths 30, 46, 42; the computed and "
      "tabulated 192-bit value is 36");
  return t;
}

CostTable comparison_table() {
  CostTable t{"compare", "Complete AES compared with earlier implementations",
              {}, {}};
  for (int key_bits : kAesKeySizes) {
    for (const PublishedRow& prior : kPriorWork) {
      if (prior.key_bits != key_bits) continue;
      t.rows.push_back({"AES-" + std::to_string(key_bits) + " " + prior.source,
                        prior.costs, prior.costs, RowStatus::Reference,
                        "published figures, not recomputed"});
    }
    for (const PublishedRow& present : kComparisonPresent) {
      if (present.key_bits != key_bits) continue;
      const CostRecord computed = aes_full_costs(
          AesParameters::for_key_bits(key_bits), ToffoliVariant::TDepthOne);
      TableRow row{"AES-" + std::to_string(key_bits) + " " + present.source,
                   computed, present.costs, RowStatus::Match, ""};
      if (computed != present.costs) {
        row.status = RowStatus::Inconsistent;
        row.note =
            "printed comparison row disagrees with the complete-AES table, "
            "which the computation reproduces";
      }
      t.rows.push_back(std::move(row));
    }
  }
  t.notes.push_back(
      "flagged rows are left as printed; neither source is reconciled");
  return t;
}

CostTable table_by_name(std::string_view name) {
  if (name == "sbox") return sbox_table();
  if (name == "round") return round_table();
  if (name == "aes") return aes_table();
  if (name == "compare") return comparison_table();
  throw DomainError("unknown table '" + std::string(name) +
                    "' (expected sbox, round, aes or compare)");
}

namespace {

std::string cell(Wide v) {
  return v == kNotAvailable ? std::string("NA") : to_string(v);
}

std::array<Wide, 5> columns(const CostRecord& c) {
  return {c.ancilla, c.cnot_count, c.cnot_depth, c.t_count, c.t_depth};
}

constexpr std::array<const char*, 5> kColumnNames{
    "ancilla", "cnot_count", "cnot_depth", "t_count", "t_depth"};

}  // namespace

std::string render_text(const CostTable& table) {
  std::ostringstream out;
  out << table.caption << "\n";
  std::size_t label_width = 5;
  for (const TableRow& row : table.rows) {
    label_width = std::max(label_width, row.label.size());
  }
  out << std::left << std::setw(static_cast<int>(label_width)) << "row";
  for (const char* name : kColumnNames) out << "  " << std::setw(10) << name;
  out << "  status\n";
  for (const TableRow& row : table.rows) {
    out << std::left << std::setw(static_cast<int>(label_width)) << row.label;
    const auto got = columns(row.computed);
    for (Wide v : got) out << "  " << std::setw(10) << cell(v);
    out << "  " << to_string(row.status) << "\n";
    if (row.status == RowStatus::Mismatch ||
        row.status == RowStatus::Inconsistent) {
      out << std::setw(static_cast<int>(label_width)) << "  printed";
      for (Wide v : columns(row.expected)) out << "  " << std::setw(10) << cell(v);
      out << "\n";
    }
    if (!row.note.empty()) out << "  note: " << row.note << "\n";
  }
  for (const std::string& note : table.notes) out << "note: " << note << "\n";
  return out.str();
}

std::string render_json(const CostTable& table) {
  const auto record = [](const CostRecord& c) {
    nlohmann::ordered_json j;
    const auto values = columns(c);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == kNotAvailable) {
        j[kColumnNames[i]] = nullptr;
      } else {
        j[kColumnNames[i]] = static_cast<std::int64_t>(values[i]);
      }
    }
    return j;
  };
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TableRow& row : table.rows) {
    rows.push_back({{"label", row.label},
                    {"status", std::string(to_string(row.status))},
                    {"computed", record(row.computed)},
                    {"expected", record(row.expected)},
                    {"note", row.note}});
  }
  nlohmann::ordered_json j = {{"table", table.name},
                              {"caption", table.caption},
                              {"reproduced", table.reproduced()},
                              {"rows", std::move(rows)},
                              {"notes", table.notes}};
  return j.dump(2);
}

}  // namespace tdepth
