// Copyright 2026 The revmul Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revmul/metrics.hpp"

namespace revmul {

enum class BlockKind {
    addnop,
    ror,  // rotate over the 2n product lines
    multiplier,
};

std::string_view block_name(BlockKind kind);
/// Accepts "addnop", "ror", "mul" / "multiplier". Throws std::invalid_argument.
BlockKind parse_block_kind(std::string_view name);

/// Closed-form resource estimates for operand width n >= 1:
///   ADD/NOP     QC 20n+5       AI n+2   delay 15n+10        gates 4n+1
///   ROR (2n)    QC 6n-3        AI 0     delay 6             gates 2n-1
///   multiplier  QC 26n^2-4n+3  AI 2n+1  delay 15n^2+16n-6   gates 6n^2-2n+1
/// asap_depth and garbage_outputs are left unset.
Metrics formula_metrics(BlockKind kind, std::uint64_t n);

/// Circuit the formulas describe: build_addnop(n), build_ror(2n) or
/// build_multiplier(n).
Circuit build_block(BlockKind kind, std::size_t n);

struct FormulaMismatch {
    BlockKind block;
    std::uint64_t n;
    std::string field;
    std::uint64_t structural;
    std::uint64_t formula;
};

struct FormulaCheckReport {
    std::uint64_t max_n = 0;
    std::uint64_t blocks_checked = 0;
    std::vector<FormulaMismatch> mismatches;
    // Blocks whose measured asap_depth exceeds their staged delay.
    std::vector<FormulaMismatch> asap_violations;

    bool ok() const {
        return mismatches.empty() && asap_violations.empty();
    }
};

/// Builds every block for n = 2..max_n and compares gate counts per kind,
/// quantum cost, ancilla inputs, stage count and staged delay against
/// formula_metrics with exact equality; also checks asap_depth <= staged delay.
FormulaCheckReport check_formulas(std::uint64_t max_n);

/// A percentage held as an exact count of hundredths.
struct Percent {
    std::int64_t hundredths = 0;

    double value() const {
        return static_cast<double>(hundredths) / 100.0;
    }
    /// Two decimals, e.g. "79.52".
    std::string to_string() const;
    static Percent parse(std::string_view text);

    auto operator<=>(const Percent &) const = default;
};

/// (theirs - ours) / theirs * 100, rounded half away from zero to two
/// decimals. Throws std::domain_error when theirs == 0.
Percent improvement_percent(std::int64_t ours, std::int64_t theirs);

/// Allowed gap between a recomputed percentage and the printed table value.
inline constexpr std::int64_t printed_percent_tolerance_hundredths = 2;

enum class TableKind {
    ancilla,
    garbage,
};

struct ComparisonRow {
    std::uint64_t n = 0;
    std::uint64_t ours = 0;
    std::uint64_t kotiyal = 0;
    std::uint64_t zhou = 0;
    Percent imp_kotiyal;
    Percent imp_zhou;
    // Values printed in the published table, for the tolerance check.
    std::optional<Percent> printed_imp_kotiyal;
    std::optional<Percent> printed_imp_zhou;
};

struct TableFlag {
    std::uint64_t n;
    std::string column;
    std::string computed;
    std::string printed;
};

struct ComparisonTable {
    TableKind kind = TableKind::ancilla;
    std::vector<ComparisonRow> rows;
    std::vector<TableFlag> flags;  // cells beyond tolerance of the printed value
    std::vector<std::string> notes;
};

/// True for 4, 8, ..., 1024.
bool on_table_ladder(std::uint64_t n);

/// Rows n = 4, 8, ... max_n. Our columns come from the formulas (ancilla
/// 2n+1, garbage 0); competitor columns are the published constants for
/// Kotiyal et al. (2014) and Zhou et al. (2011). Throws std::invalid_argument
/// when max_n is not on the ladder.
ComparisonTable comparison_table(std::uint64_t max_n, TableKind kind);

std::string render_markdown(const ComparisonTable &table);
/// Columns: n,ours,ref2,ref3,imp2,imp3 (ancilla) or n,ref1,ref2,imp (garbage).
std::string render_csv(const ComparisonTable &table);

/// Asymptotic comparison with the recursive Karatsuba designs (published
/// rows) plus our exact figures at operand width n.
std::string render_karatsuba_markdown(std::uint64_t n);

}  // namespace revmul
