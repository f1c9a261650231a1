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

#include "revmul/metrics.hpp"

#include <algorithm>
#include <vector>

namespace revmul {

std::uint64_t asap_depth(const Circuit &circuit) {
    // next_free[l] is the first layer line l can still join.
    std::vector<std::size_t> next_free(circuit.width(), 0);
    std::vector<std::uint64_t> layer_cost;
    for (const auto &gate : circuit.gates()) {
        std::size_t layer = 0;
        for (Line l : gate.lines()) {
            layer = std::max(layer, next_free[l]);
        }
        if (layer == layer_cost.size()) {
            layer_cost.push_back(0);
        }
        layer_cost[layer] = std::max(layer_cost[layer], gate.cost());
        for (Line l : gate.lines()) {
            next_free[l] = layer + 1;
        }
    }
    std::uint64_t total = 0;
    for (auto c : layer_cost) {
        total += c;
    }
    return total;
}

std::uint64_t staged_delay(const Circuit &circuit) {
    const auto &gates = circuit.gates();
    std::uint64_t total = 0;
    for (const auto &stage : circuit.stages()) {
        std::uint64_t worst = 0;
        for (std::size_t i = stage.begin; i < stage.end; i++) {
            worst = std::max(worst, gates[i].cost());
        }
        total += worst;
    }
    for (std::size_t i = gates.size() - circuit.unstaged_tail(); i < gates.size(); i++) {
        total += gates[i].cost();
    }
    return total;
}

Metrics structural_metrics(const Circuit &circuit) {
    Metrics m;
    for (const auto &gate : circuit.gates()) {
        m.count(gate.kind)++;
        m.quantum_cost += gate.cost();
    }
    m.gate_count = circuit.size();
    m.ancilla_inputs = circuit.layout().ancilla_inputs();
    m.asap_depth = asap_depth(circuit);
    m.staged_delay = staged_delay(circuit);
    m.stage_count = circuit.stage_count();
    return m;
}

}  // namespace revmul
