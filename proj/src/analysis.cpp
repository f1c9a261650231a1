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

#include "revmul/analysis.hpp"

#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "revmul/synth.hpp"

namespace revmul {

namespace {

// Published comparison figures, transcribed verbatim. Index k is n = 4 * 2^k.
// Ancilla inputs: Kotiyal et al., "Circuit for reversible quantum multiplier
// based on binary tree optimizing ancilla and garbage bits" (VLSID 2014);
// Zhou et al., "Transistor realization of reversible TG CMOS circuits" (2011).
constexpr std::array<std::uint64_t, 9> kotiyal_ancilla{23, 83, 303, 1135, 4351, 16959, 66815, 264959, 1054719};
constexpr std::array<std::uint64_t, 9> zhou_ancilla{28, 120, 496, 2016, 8128, 32640, 130816, 523776, 2096128};
constexpr std::array<std::uint64_t, 9> kotiyal_garbage{22, 81, 300, 1131, 4346, 16953, 66808, 264951, 1054719};
constexpr std::array<std::uint64_t, 9> zhou_garbage{36, 168, 720, 2976, 12096, 48768, 195840, 784896, 3142656};
// Improvement columns as printed alongside the ancilla figures, in hundredths.
constexpr std::array<std::int64_t, 9> printed_imp_kotiyal{6086, 7951, 8910, 9427, 9703, 9848, 9923, 9961, 9980};
constexpr std::array<std::int64_t, 9> printed_imp_zhou{6785, 8583, 9334, 9677, 9841, 9921, 9960, 9980, 9990};
constexpr std::int64_t printed_garbage_imp = 10000;

constexpr std::size_t ladder_size = 9;

std::size_t ladder_index(std::uint64_t n) {
    std::uint64_t v = 4;
    for (std::size_t k = 0; k < ladder_size; k++, v *= 2) {
        if (v == n) {
            return k;
        }
    }
    throw std::invalid_argument(
        "n=" + std::to_string(n) + " is not on the table ladder 4, 8, ..., 1024");
}

void compare_field(FormulaCheckReport &report, BlockKind block, std::uint64_t n, const char *field,
                   std::uint64_t structural, std::uint64_t formula) {
    if (structural != formula) {
        report.mismatches.push_back({block, n, field, structural, formula});
    }
}

void flag_if_off(ComparisonTable &table, const ComparisonRow &row, const char *column, const Percent &computed,
                 const std::optional<Percent> &printed) {
    if (printed && std::llabs(computed.hundredths - printed->hundredths) > printed_percent_tolerance_hundredths) {
        table.flags.push_back({row.n, column, computed.to_string(), printed->to_string()});
    }
}

}  // namespace

std::string_view block_name(BlockKind kind) {
    switch (kind) {
        case BlockKind::addnop:
            return "addnop";
        case BlockKind::ror:
            return "ror";
        case BlockKind::multiplier:
            return "mul";
    }
    return "?";
}

BlockKind parse_block_kind(std::string_view name) {
    if (name == "addnop") {
        return BlockKind::addnop;
    }
    if (name == "ror") {
        return BlockKind::ror;
    }
    if (name == "mul" || name == "multiplier") {
        return BlockKind::multiplier;
    }
    throw std::invalid_argument("unknown block kind " + std::string(name));
}

Metrics formula_metrics(BlockKind kind, std::uint64_t n) {
    if (n < 1) {
        throw std::invalid_argument("operand width n must be >= 1");
    }
    Metrics m;
    switch (kind) {
        case BlockKind::addnop:
            m.count(GateKind::toffoli) = 2 * n + 1;
            m.count(GateKind::fredkin) = 2 * n;
            m.quantum_cost = 20 * n + 5;
            m.ancilla_inputs = n + 2;
            m.stage_count = 3 * n + 2;
            m.staged_delay = 15 * n + 10;
            break;
        case BlockKind::ror:
            m.count(GateKind::swap) = 2 * n - 1;
            m.quantum_cost = 6 * n - 3;
            m.ancilla_inputs = 0;
            m.stage_count = n == 1 ? 1 : 2;
            m.staged_delay = n == 1 ? 3 : 6;
            break;
        case BlockKind::multiplier:
            m.count(GateKind::toffoli) = n * (2 * n + 1);
            m.count(GateKind::fredkin) = 2 * n * n;
            m.count(GateKind::swap) = (n - 1) * (2 * n - 1);
            m.quantum_cost = 26 * n * n - 4 * n + 3;
            m.ancilla_inputs = 2 * n + 1;
            m.stage_count = n * (3 * n + 2) + 2 * (n - 1);
            m.staged_delay = 15 * n * n + 16 * n - 6;
            break;
    }
    for (auto c : m.gates_by_kind) {
        m.gate_count += c;
    }
    return m;
}

Circuit build_block(BlockKind kind, std::size_t n) {
    switch (kind) {
        case BlockKind::addnop:
            return build_addnop(n);
        case BlockKind::ror:
            return build_ror(2 * n);
        case BlockKind::multiplier:
            return build_multiplier(n);
    }
    throw std::invalid_argument("unknown block kind");
}

FormulaCheckReport check_formulas(std::uint64_t max_n) {
    if (max_n < 2) {
        throw std::invalid_argument("check_formulas needs max_n >= 2");
    }
    FormulaCheckReport report;
    report.max_n = max_n;
    for (std::uint64_t n = 2; n <= max_n; n++) {
        for (auto kind : {BlockKind::addnop, BlockKind::ror, BlockKind::multiplier}) {
            const Metrics s = structural_metrics(build_block(kind, n));
            const Metrics f = formula_metrics(kind, n);
            compare_field(report, kind, n, "cnot", s.count(GateKind::cnot), f.count(GateKind::cnot));
            compare_field(report, kind, n, "toffoli", s.count(GateKind::toffoli), f.count(GateKind::toffoli));
            compare_field(report, kind, n, "fredkin", s.count(GateKind::fredkin), f.count(GateKind::fredkin));
            compare_field(report, kind, n, "swap", s.count(GateKind::swap), f.count(GateKind::swap));
            compare_field(report, kind, n, "gate_count", s.gate_count, f.gate_count);
            compare_field(report, kind, n, "quantum_cost", s.quantum_cost, f.quantum_cost);
            compare_field(report, kind, n, "ancilla_inputs", s.ancilla_inputs, f.ancilla_inputs);
            compare_field(report, kind, n, "stage_count", s.stage_count, f.stage_count);
            compare_field(report, kind, n, "staged_delay", s.staged_delay, f.staged_delay);
            if (*s.asap_depth > f.staged_delay) {
                report.asap_violations.push_back({kind, n, "asap_depth", *s.asap_depth, f.staged_delay});
            }
            report.blocks_checked++;
        }
    }
    return report;
}

std::string Percent::to_string() const {
    const std::int64_t mag = std::llabs(hundredths);
    std::string frac = std::to_string(mag % 100);
    if (frac.size() < 2) {
        frac.insert(frac.begin(), '0');
    }
    return (hundredths < 0 ? "-" : "") + std::to_string(mag / 100) + "." + frac;
}

Percent Percent::parse(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.back() == '%') {
        s.pop_back();
    }
    bool negative = !s.empty() && s.front() == '-';
    if (negative) {
        s.erase(s.begin());
    }
    auto dot = s.find('.');
    std::string whole = s.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (whole.empty() || frac.size() > 2 || whole.find_first_not_of("0123456789") != std::string::npos ||
        frac.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("malformed percentage " + std::string(text));
    }
    while (frac.size() < 2) {
        frac.push_back('0');
    }
    std::int64_t value = std::stoll(whole) * 100 + std::stoll(frac);
    return {negative ? -value : value};
}

Percent improvement_percent(std::int64_t ours, std::int64_t theirs) {
    if (theirs == 0) {
        throw std::domain_error("improvement over a zero reference is undefined");
    }
    // hundredths of a percent = (theirs - ours) * 10000 / theirs, rounded half away from zero
    std::int64_t num = (theirs - ours) * 10000;
    std::int64_t den = theirs;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const bool negative = num < 0;
    const std::int64_t mag = negative ? -num : num;
    std::int64_t q = mag / den;
    if (2 * (mag % den) >= den) {
        q++;
    }
    return {negative ? -q : q};
}

bool on_table_ladder(std::uint64_t n) {
    for (std::uint64_t v = 4; v <= 1024; v *= 2) {
        if (v == n) {
            return true;
        }
    }
    return false;
}

ComparisonTable comparison_table(std::uint64_t max_n, TableKind kind) {
    const std::size_t last = ladder_index(max_n);
    ComparisonTable table;
    table.kind = kind;
    for (std::size_t k = 0; k <= last; k++) {
        ComparisonRow row;
        row.n = std::uint64_t{4} << k;
        if (kind == TableKind::ancilla) {
            row.ours = formula_metrics(BlockKind::multiplier, row.n).ancilla_inputs;
            row.kotiyal = kotiyal_ancilla[k];
            row.zhou = zhou_ancilla[k];
            row.printed_imp_kotiyal = Percent{printed_imp_kotiyal[k]};
            row.printed_imp_zhou = Percent{printed_imp_zhou[k]};
        } else {
            row.ours = 0;
            row.kotiyal = kotiyal_garbage[k];
            row.zhou = zhou_garbage[k];
            row.printed_imp_kotiyal = Percent{printed_garbage_imp};
            row.printed_imp_zhou = Percent{printed_garbage_imp};
        }
        row.imp_kotiyal = improvement_percent(static_cast<std::int64_t>(row.ours), static_cast<std::int64_t>(row.kotiyal));
        row.imp_zhou = improvement_percent(static_cast<std::int64_t>(row.ours), static_cast<std::int64_t>(row.zhou));
        flag_if_off(table, row, "imp_kotiyal", row.imp_kotiyal, row.printed_imp_kotiyal);
        flag_if_off(table, row, "imp_zhou", row.imp_zhou, row.printed_imp_zhou);
        table.rows.push_back(row);
    }
    if (kind == TableKind::ancilla) {
        table.notes.push_back(
            "Improvement columns are rounded half-up; the published table truncates, so cells may differ by up to 0.02.");
    } else {
        table.notes.push_back("Garbage outputs of the add-and-rotate multiplier are 0 for every n.");
        if (last == ladder_size - 1) {
            table.notes.push_back(
                "The published Kotiyal garbage figure at n=1024 (1054719) equals its ancilla figure and breaks the "
                "pattern of earlier rows; it is reproduced verbatim.");
        }
    }
    return table;
}

std::string render_markdown(const ComparisonTable &table) {
    std::ostringstream out;
    if (table.kind == TableKind::ancilla) {
        out << "| N | Ancilla inputs (ours) | Ancilla inputs (Kotiyal et al.) | Ancilla inputs (Zhou et al.) | "
               "%imp over Kotiyal et al. | %imp over Zhou et al. |\n";
        out << "|---|---|---|---|---|---|\n";
        for (const auto &r : table.rows) {
            out << "| " << r.n << " | " << r.ours << " | " << r.kotiyal << " | " << r.zhou << " | "
                << r.imp_kotiyal.to_string() << " | " << r.imp_zhou.to_string() << " |\n";
        }
    } else {
        out << "| N | Garbage outputs (ours) | Garbage outputs (Kotiyal et al.) | Garbage outputs (Zhou et al.) | "
               "%imp over both |\n";
        out << "|---|---|---|---|---|\n";
        for (const auto &r : table.rows) {
            out << "| " << r.n << " | " << r.ours << " | " << r.kotiyal << " | " << r.zhou << " | "
                << r.imp_kotiyal.to_string() << " |\n";
        }
    }
    for (const auto &note : table.notes) {
        out << "\n> " << note << "\n";
    }
    for (const auto &f : table.flags) {
        out << "\n> FLAG n=" << f.n << " " << f.column << ": computed " << f.computed << ", printed " << f.printed
            << "\n";
    }
    return out.str();
}

std::string render_csv(const ComparisonTable &table) {
    std::ostringstream out;
    if (table.kind == TableKind::ancilla) {
        out << "n,ours,ref2,ref3,imp2,imp3\n";
        for (const auto &r : table.rows) {
            out << r.n << "," << r.ours << "," << r.kotiyal << "," << r.zhou << "," << r.imp_kotiyal.to_string()
                << "," << r.imp_zhou.to_string() << "\n";
        }
    } else {
        out << "n,ref1,ref2,imp\n";
        for (const auto &r : table.rows) {
            out << r.n << "," << r.kotiyal << "," << r.zhou << "," << r.imp_kotiyal.to_string() << "\n";
        }
    }
    return out.str();
}

std::string render_karatsuba_markdown(std::uint64_t n) {
    const Metrics ours = formula_metrics(BlockKind::multiplier, n);
    std::ostringstream out;
    out << "| Design | Gate count | Ancilla inputs | Delay |\n";
    out << "|---|---|---|---|\n";
    // Recursive Karatsuba designs of Portugal and Figueiredo (2006), asymptotic rows as published.
    out << "| K(1) | O(n^log2(3)) | 6n = " << 6 * n << " | O(n) |\n";
    out << "| K(2) | O(n^log2(6)) | 4n = " << 4 * n << " | O(n^log2(6)) |\n";
    out << "| K(3) | O(n^log2(3)) | 5n+n/2+1 = " << 5 * n + n / 2 + 1 << " | O(n^log2(3)) |\n";
    out << "| K(4) | O(n^log2(6)) | 3n+n/2 = " << 3 * n + n / 2 << " | O(n^log2(6)) |\n";
    out << "| Add-and-rotate | O(n^2), 6n^2-2n+1 = " << ours.gate_count << " | 2n+1 = " << ours.ancilla_inputs
        << " | O(n^2), 15n^2+16n-6 = " << ours.staged_delay << " |\n";
    out << "\nFigures evaluated at n = " << n << ".\n";
    return out.str();
}

}  // namespace revmul
