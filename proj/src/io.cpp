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

#include "revmul/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace revmul {

using ordered_json = nlohmann::ordered_json;

ParseError::ParseError(std::size_t line_number, const std::string &message)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + message), line_number_(line_number) {}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            j++;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view word, std::size_t line_number) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError(line_number, "expected a non-negative integer, got '" + std::string(word) + "'");
    }
    return value;
}

std::optional<GateKind> gate_kind_for(std::string_view word) {
    for (auto kind : all_gate_kinds) {
        if (mnemonic(kind) == word) {
            return kind;
        }
    }
    return std::nullopt;
}

void write_register_lines(std::ostream &out, const RegisterLayout &layout) {
    for (const auto &r : layout.registers()) {
        if (r.role == LineRole::data) {
            out << "reg " << r.name << " " << r.lo << " " << r.hi() << "\n";
        } else {
            out << "anc " << r.name << " " << r.lo << " " << r.hi() << " " << (r.constant ? 1 : 0) << "\n";
        }
    }
}

ordered_json values_json(const RegisterValues &values) {
    ordered_json j = ordered_json::object();
    for (const auto &[name, v] : values) {
        j[name] = v;
    }
    return j;
}

}  // namespace

std::string write_netlist(const Circuit &circuit) {
    std::ostringstream out;
    out << "rev 1\n";
    out << "qubits " << circuit.width() << "\n";
    write_register_lines(out, circuit.layout());
    const auto &marks = circuit.stage_marks();
    std::size_t next_mark = 0;
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); i++) {
        out << mnemonic(gates[i].kind);
        for (Line l : gates[i].lines()) {
            out << " " << l;
        }
        out << "\n";
        if (next_mark < marks.size() && marks[next_mark] == i + 1) {
            out << "---\n";
            next_mark++;
        }
    }
    return out.str();
}

Circuit parse_netlist(std::string_view text) {
    bool seen_version = false;
    std::optional<std::size_t> width;
    std::vector<Register> registers;
    std::optional<Circuit> circuit;
    std::size_t line_number = 0;

    auto finish_header = [&](std::size_t at) {
        if (circuit) {
            return;
        }
        if (!width) {
            throw ParseError(at, "missing 'qubits' header");
        }
        try {
            RegisterLayout layout(registers);
            if (layout.width() != *width) {
                throw ParseError(at, "registers cover " + std::to_string(layout.width()) + " lines but header declares " +
                                         std::to_string(*width));
            }
            circuit.emplace(std::move(layout));
        } catch (const std::invalid_argument &e) {
            throw ParseError(at, e.what());
        }
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        line_number++;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        const auto words = split_words(raw);
        if (words.empty()) {
            continue;
        }
        const std::string_view head = words[0];

        if (!seen_version) {
            if (head != "rev" || words.size() != 2 || words[1] != "1") {
                throw ParseError(line_number, "malformed header: expected 'rev 1'");
            }
            seen_version = true;
            continue;
        }
        if (head == "qubits") {
            if (width || words.size() != 2) {
                throw ParseError(line_number, "malformed or repeated 'qubits' header");
            }
            width = parse_uint(words[1], line_number);
            continue;
        }
        if (head == "reg" || head == "anc") {
            if (circuit) {
                throw ParseError(line_number, "register declaration after the first gate");
            }
            if (!width) {
                throw ParseError(line_number, "missing 'qubits' header");
            }
            const bool ancilla = head == "anc";
            if (words.size() != (ancilla ? 5u : 4u)) {
                throw ParseError(line_number, "malformed '" + std::string(head) + "' declaration");
            }
            Register r;
            r.name = std::string(words[1]);
            for (const auto &existing : registers) {
                if (existing.name == r.name) {
                    throw ParseError(line_number, "duplicate register name " + r.name);
                }
            }
            const auto lo = parse_uint(words[2], line_number);
            const auto hi = parse_uint(words[3], line_number);
            if (hi < lo || hi >= *width) {
                throw ParseError(line_number, "register " + r.name + " range " + std::to_string(lo) + ".." +
                                                  std::to_string(hi) + " out of range");
            }
            r.lo = static_cast<Line>(lo);
            r.size = static_cast<std::size_t>(hi - lo + 1);
            r.role = ancilla ? LineRole::ancilla : LineRole::data;
            if (ancilla) {
                const auto bit = parse_uint(words[4], line_number);
                if (bit > 1) {
                    throw ParseError(line_number, "ancilla constant must be 0 or 1");
                }
                r.constant = bit == 1;
            }
            registers.push_back(std::move(r));
            continue;
        }
        if (head == "---") {
            finish_header(line_number);
            try {
                circuit->mark_stage();
            } catch (const std::logic_error &e) {
                throw ParseError(line_number, e.what());
            }
            continue;
        }
        if (auto kind = gate_kind_for(head)) {
            finish_header(line_number);
            if (words.size() != 1 + arity(*kind)) {
                throw ParseError(line_number, std::string(head) + " takes " + std::to_string(arity(*kind)) + " lines");
            }
            Gate g{*kind, {}};
            for (std::size_t k = 0; k < arity(*kind); k++) {
                const auto v = parse_uint(words[1 + k], line_number);
                if (v >= circuit->width()) {
                    throw ParseError(line_number, "line index " + std::to_string(v) + " out of range for width " +
                                                      std::to_string(circuit->width()));
                }
                g.operands[k] = static_cast<Line>(v);
            }
            if (!g.has_distinct_lines()) {
                throw ParseError(line_number, std::string(head) + " uses the same line twice");
            }
            circuit->append(g);
            continue;
        }
        throw ParseError(line_number, "unknown gate mnemonic '" + std::string(head) + "'");
    }
    line_number = std::max<std::size_t>(line_number, 1);
    if (!seen_version) {
        throw ParseError(line_number, "malformed header: expected 'rev 1'");
    }
    finish_header(line_number);
    return std::move(*circuit);
}

std::string export_qasm(const Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    for (const auto &r : circuit.layout().registers()) {
        out << "// " << r.name << " = q[" << r.lo << ".." << r.hi() << "]";
        if (r.role == LineRole::ancilla) {
            out << ", ancilla initialised to " << (r.constant ? 1 : 0);
        }
        out << "\n";
    }
    out << "qreg q[" << circuit.width() << "];\n";
    const auto &marks = circuit.stage_marks();
    std::size_t next_mark = 0;
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); i++) {
        out << mnemonic(gates[i].kind) << " ";
        const auto ls = gates[i].lines();
        for (std::size_t k = 0; k < ls.size(); k++) {
            out << (k ? "," : "") << "q[" << ls[k] << "]";
        }
        out << ";\n";
        if (next_mark < marks.size() && marks[next_mark] == i + 1) {
            next_mark++;
            out << "// end of stage " << next_mark << "\n";
        }
    }
    return out.str();
}

std::string metrics_json(const Metrics &m) {
    ordered_json j;
    j["gate_count"] = m.gate_count;
    ordered_json kinds;
    for (auto kind : all_gate_kinds) {
        kinds[std::string(mnemonic(kind))] = m.count(kind);
    }
    j["gates_by_kind"] = kinds;
    j["quantum_cost"] = m.quantum_cost;
    j["ancilla_inputs"] = m.ancilla_inputs;
    j["garbage_outputs"] = m.garbage_outputs ? ordered_json(*m.garbage_outputs) : ordered_json(nullptr);
    j["asap_depth"] = m.asap_depth ? ordered_json(*m.asap_depth) : ordered_json(nullptr);
    j["staged_delay"] = m.staged_delay;
    j["stage_count"] = m.stage_count;
    return j.dump(2) + "\n";
}

std::string metrics_json(const VerifyReport &r) {
    ordered_json j;
    j["ok"] = r.ok;
    if (r.mode.kind == VerifyMode::Kind::exhaustive) {
        j["mode"] = "exhaustive";
    } else {
        j["mode"] = "randomized";
        j["count"] = r.mode.count;
        j["seed"] = r.mode.seed;
    }
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    j["garbage_outputs"] =
        r.certified_garbage_outputs ? ordered_json(*r.certified_garbage_outputs) : ordered_json(nullptr);
    ordered_json ces = ordered_json::array();
    for (const auto &ce : r.counterexamples) {
        ces.push_back({{"input", values_json(ce.input)},
                       {"expected", values_json(ce.expected)},
                       {"got", values_json(ce.got)}});
    }
    j["counterexamples"] = ces;
    return j.dump(2) + "\n";
}

std::string metrics_json(const ComparisonTable &t) {
    ordered_json j;
    j["table"] = t.kind == TableKind::ancilla ? "ancilla" : "garbage";
    ordered_json rows = ordered_json::array();
    for (const auto &r : t.rows) {
        ordered_json row;
        row["n"] = r.n;
        row["ours"] = r.ours;
        row["kotiyal"] = r.kotiyal;
        row["zhou"] = r.zhou;
        row["imp_kotiyal"] = r.imp_kotiyal.to_string();
        row["imp_zhou"] = r.imp_zhou.to_string();
        if (r.printed_imp_kotiyal) {
            row["printed_imp_kotiyal"] = r.printed_imp_kotiyal->to_string();
        }
        if (r.printed_imp_zhou) {
            row["printed_imp_zhou"] = r.printed_imp_zhou->to_string();
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    ordered_json flags = ordered_json::array();
    for (const auto &f : t.flags) {
        flags.push_back({{"n", f.n}, {"column", f.column}, {"computed", f.computed}, {"printed", f.printed}});
    }
    j["flags"] = flags;
    j["tolerance"] = Percent{printed_percent_tolerance_hundredths}.to_string();
    j["notes"] = t.notes;
    return j.dump(2) + "\n";
}

std::string metrics_json(const FormulaCheckReport &r) {
    ordered_json j;
    j["ok"] = r.ok();
    j["max_n"] = r.max_n;
    j["blocks_checked"] = r.blocks_checked;
    auto list = [](const std::vector<FormulaMismatch> &items) {
        ordered_json out = ordered_json::array();
        for (const auto &m : items) {
            out.push_back({{"block", block_name(m.block)},
                           {"n", m.n},
                           {"field", m.field},
                           {"structural", m.structural},
                           {"formula", m.formula}});
        }
        return out;
    };
    j["mismatches"] = list(r.mismatches);
    j["asap_violations"] = list(r.asap_violations);
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

}  // namespace revmul
