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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "revmul/analysis.hpp"
#include "revmul/circuit.hpp"
#include "revmul/metrics.hpp"
#include "revmul/sim.hpp"

namespace revmul {

class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line_number, const std::string &message);
    std::size_t line_number() const {
        return line_number_;
    }

   private:
    std::size_t line_number_;
};

/// Canonical `.rev` text:
///
///   rev 1
///   qubits <width>
///   reg <NAME> <lo> <hi>
///   anc <NAME> <lo> <hi> <constant-bit>
///   cx c t | ccx c1 c2 t | cswap c a b | swap a b
///   ---
///
/// Register lines appear in layout order and gates in execution order. A
/// `---` line closes each marked stage.
std::string write_netlist(const Circuit &circuit);

/// Inverse of write_netlist. `#` starts a comment; blank lines are ignored.
/// Gates after the last `---` stay unstaged. Throws ParseError carrying the
/// 1-based line number.
Circuit parse_netlist(std::string_view text);

/// OPENQASM 2.0 text with one register q[width]. Ancilla constants and stage
/// boundaries become comments.
std::string export_qasm(const Circuit &circuit);

std::string metrics_json(const Metrics &metrics);
std::string metrics_json(const VerifyReport &report);
std::string metrics_json(const ComparisonTable &table);
std::string metrics_json(const FormulaCheckReport &report);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_text_file(const std::string &path);
/// Throws std::runtime_error if the file cannot be written.
void write_text_file(const std::string &path, std::string_view text);

}  // namespace revmul
