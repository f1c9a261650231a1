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
#include <optional>

#include "revmul/circuit.hpp"

namespace revmul {

/// Resource figures for a circuit or a closed-form block estimate. Delays are
/// in primitive-gate units, so a gate's delay equals its quantum cost.
struct Metrics {
    std::array<std::uint64_t, 4> gates_by_kind{};  // indexed by GateKind
    std::uint64_t gate_count = 0;
    std::uint64_t quantum_cost = 0;
    std::uint64_t ancilla_inputs = 0;
    // Only set by simulation-backed verification; structure alone cannot
    // show that an output line is not garbage.
    std::optional<std::uint64_t> garbage_outputs;
    // Unset for closed-form estimates.
    std::optional<std::uint64_t> asap_depth;
    std::uint64_t staged_delay = 0;
    std::uint64_t stage_count = 0;

    std::uint64_t count(GateKind kind) const {
        return gates_by_kind[static_cast<std::size_t>(kind)];
    }
    std::uint64_t &count(GateKind kind) {
        return gates_by_kind[static_cast<std::size_t>(kind)];
    }

    bool operator==(const Metrics &) const = default;
};

/// Greedy layering: each gate goes in the first layer after every earlier gate
/// that shares a line with it. Returns the sum over layers of the most
/// expensive gate in the layer.
std::uint64_t asap_depth(const Circuit &circuit);

/// Sum over marked stages of the most expensive gate in the stage; gates
/// after the last mark count as sequential single-gate stages.
std::uint64_t staged_delay(const Circuit &circuit);

Metrics structural_metrics(const Circuit &circuit);

}  // namespace revmul
