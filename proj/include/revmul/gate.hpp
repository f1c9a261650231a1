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

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace revmul {

/// Index of a circuit line (wire). Line 0 is the first declared line.
using Line = std::uint32_t;

enum class GateKind : std::uint8_t {
    cnot,
    toffoli,
    fredkin,
    swap,
};

inline constexpr std::array<GateKind, 4> all_gate_kinds{
    GateKind::cnot, GateKind::toffoli, GateKind::fredkin, GateKind::swap};

/// Number of primitive 1x1/2x2 quantum gates the reversible gate decomposes into.
constexpr std::uint64_t primitive_cost(GateKind kind) {
    switch (kind) {
        case GateKind::cnot:
            return 1;
        case GateKind::toffoli:
            return 5;
        case GateKind::fredkin:
            return 5;
        case GateKind::swap:
            return 3;
    }
    return 0;
}

constexpr std::size_t arity(GateKind kind) {
    return kind == GateKind::cnot || kind == GateKind::swap ? 2 : 3;
}

/// Lower-case mnemonic shared by the netlist and assembly writers.
std::string_view mnemonic(GateKind kind);

/// One reversible gate instance.
///
/// Operand order is fixed per kind:
///   cnot    (control, target)
///   toffoli (control1, control2, target)
///   fredkin (control, swap1, swap2)
///   swap    (a, b)
/// Unused trailing slots are zero. Operands are validated when the gate is
/// appended to a circuit, not at construction.
struct Gate {
    GateKind kind;
    std::array<Line, 3> operands{};

    std::span<const Line> lines() const {
        return {operands.data(), arity(kind)};
    }
    std::uint64_t cost() const {
        return primitive_cost(kind);
    }
    bool has_distinct_lines() const;
    bool touches(Line line) const;

    bool operator==(const Gate &) const = default;
};

constexpr Gate cnot(Line control, Line target) {
    return {GateKind::cnot, {control, target, 0}};
}
constexpr Gate toffoli(Line control1, Line control2, Line target) {
    return {GateKind::toffoli, {control1, control2, target}};
}
constexpr Gate fredkin(Line control, Line swap1, Line swap2) {
    return {GateKind::fredkin, {control, swap1, swap2}};
}
constexpr Gate swap_gate(Line a, Line b) {
    return {GateKind::swap, {a, b, 0}};
}

}  // namespace revmul
