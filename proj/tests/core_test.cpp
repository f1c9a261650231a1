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

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "revmul/circuit.hpp"
#include "revmul/metrics.hpp"
#include "revmul/sim.hpp"
#include "revmul/synth.hpp"
#include "test_util.hpp"

using namespace revmul;

TEST(gate, primitive_costs) {
    EXPECT_EQ(primitive_cost(GateKind::cnot), 1u);
    EXPECT_EQ(primitive_cost(GateKind::toffoli), 5u);
    EXPECT_EQ(primitive_cost(GateKind::fredkin), 5u);
    EXPECT_EQ(primitive_cost(GateKind::swap), 3u);
}

TEST(gate, distinct_lines) {
    EXPECT_TRUE(toffoli(0, 4, 11).has_distinct_lines());
    EXPECT_FALSE(swap_gate(3, 3).has_distinct_lines());
    EXPECT_FALSE(fredkin(1, 2, 1).has_distinct_lines());
    EXPECT_EQ(cnot(2, 5).lines().size(), 2u);
    EXPECT_EQ(fredkin(2, 5, 6).lines().size(), 3u);
}

TEST(layout, multiplier_n2) {
    auto layout = multiplier_layout(2);
    EXPECT_EQ(layout.width(), 9u);
    EXPECT_EQ(layout.at("A").lo, 0u);
    EXPECT_EQ(layout.at("B").lo, 2u);
    EXPECT_EQ(layout.at("P").lo, 4u);
    EXPECT_EQ(layout.at("P").hi(), 7u);
    EXPECT_EQ(layout.at("Zcin").lo, 8u);
    Circuit c(layout);
    EXPECT_EQ(c.width(), 9u);
    EXPECT_EQ(c.size(), 0u);
    EXPECT_EQ(c.stage_count(), 0u);
}

TEST(layout, multiplier_width_budget) {
    // n + n + 2n + 1 lines.
    for (std::size_t n = 1; n <= 16; n++) {
        EXPECT_EQ(multiplier_layout(n).width(), 4 * n + 1);
        EXPECT_EQ(multiplier_layout(n).ancilla_inputs(), 2 * n + 1);
    }
    EXPECT_EQ(multiplier_layout(4).width(), 17u);
}

TEST(layout, rejects_overlap_gap_and_duplicates) {
    EXPECT_THROW(RegisterLayout({{"A", 0, 2}, {"B", 1, 2}}), std::invalid_argument);
    EXPECT_THROW(RegisterLayout({{"A", 0, 2}, {"B", 3, 2}}), std::invalid_argument);
    EXPECT_THROW(RegisterLayout({{"A", 0, 2}, {"A", 2, 2}}), std::invalid_argument);
    EXPECT_THROW(RegisterLayout({{"A", 0, 0}}), std::invalid_argument);
    EXPECT_THROW(multiplier_layout(0), std::invalid_argument);
}

TEST(layout, owner_and_roles) {
    auto layout = addnop_layout(3);
    EXPECT_EQ(layout.width(), 2u * 3 + 3);
    EXPECT_EQ(layout.ancilla_inputs(), 3u + 2);
    EXPECT_EQ(layout.owner(0).name, "A");
    EXPECT_EQ(layout.owner(layout.width() - 1).name, "Zcin");
    EXPECT_THROW(layout.owner(static_cast<Line>(layout.width())), std::out_of_range);
}

TEST(circuit, append_validates_lines) {
    Circuit c(multiplier_layout(4));
    c.append(toffoli(0, 4, 11));
    EXPECT_EQ(c.size(), 1u);
    EXPECT_THROW(c.append(swap_gate(3, 3)), std::invalid_argument);
    EXPECT_THROW(c.append(cnot(0, 17)), std::invalid_argument);
    EXPECT_EQ(c.size(), 1u);
}

TEST(circuit, stage_marks) {
    Circuit c(rotate_layout(4));
    c.append(swap_gate(0, 1)).mark_stage();
    c.append(swap_gate(1, 2)).append(swap_gate(2, 3)).mark_stage();
    EXPECT_EQ(c.stage_count(), 2u);
    auto stages = c.stages();
    EXPECT_EQ(stages[0].begin, 0u);
    EXPECT_EQ(stages[0].end, 1u);
    EXPECT_EQ(stages[1].end, 3u);
    EXPECT_THROW(c.mark_stage(), std::logic_error);
    Circuit empty(rotate_layout(2));
    EXPECT_THROW(empty.mark_stage(), std::logic_error);
}

TEST(metrics, empty_circuit_is_all_zero) {
    Metrics m = structural_metrics(Circuit(RegisterLayout({{"Q", 0, 3}})));
    EXPECT_EQ(m.gate_count, 0u);
    EXPECT_EQ(m.quantum_cost, 0u);
    EXPECT_EQ(m.ancilla_inputs, 0u);
    EXPECT_EQ(m.asap_depth, 0u);
    EXPECT_EQ(m.staged_delay, 0u);
    EXPECT_FALSE(m.garbage_outputs.has_value());
}

TEST(metrics, ror8_and_addnop4_quantum_cost) {
    EXPECT_EQ(structural_metrics(build_ror(8)).quantum_cost, 3u * (8 - 1));
    EXPECT_EQ(structural_metrics(build_addnop(4)).quantum_cost, 20u * 4 + 5);
}

TEST(metrics, asap_depth_examples) {
    EXPECT_EQ(asap_depth(build_ror(8)), 6u);

    Circuit one(rotate_layout(2));
    one.append(swap_gate(0, 1));
    EXPECT_EQ(asap_depth(one), 3u);

    Circuit two(RegisterLayout({{"Q", 0, 6}}));
    two.append(toffoli(0, 1, 2)).append(toffoli(3, 4, 5));
    EXPECT_EQ(asap_depth(two), 5u);

    Circuit chain(RegisterLayout({{"Q", 0, 3}}));
    chain.append(cnot(0, 1)).append(toffoli(0, 1, 2));
    EXPECT_EQ(asap_depth(chain), 6u);
}

TEST(metrics, unstaged_tail_is_sequential) {
    Circuit c(RegisterLayout({{"Q", 0, 4}}));
    c.append(swap_gate(0, 1)).append(swap_gate(2, 3)).mark_stage();
    c.append(cnot(0, 1)).append(cnot(2, 3));
    EXPECT_EQ(staged_delay(c), 3u + 1 + 1);
    EXPECT_EQ(c.unstaged_tail(), 2u);
}

TEST(metrics, quantum_cost_is_weighted_kind_count) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; trial++) {
        auto c = test_util::random_circuit(rng, 3 + rng() % 10, rng() % 40);
        Metrics m = structural_metrics(c);
        EXPECT_EQ(m.quantum_cost, 1 * m.count(GateKind::cnot) + 5 * m.count(GateKind::toffoli) +
                                      5 * m.count(GateKind::fredkin) + 3 * m.count(GateKind::swap));
        EXPECT_LE(*m.asap_depth, m.staged_delay);
        EXPECT_LE(m.staged_delay, m.quantum_cost);
    }
}

TEST(metrics, asap_invariant_under_disjoint_reordering) {
    // Reordering gates of one stage that act on disjoint lines does not change the depth.
    for (std::size_t n : {2, 3, 5}) {
        Circuit c = build_multiplier(n);
        auto gates = c.gates();
        for (const auto &stage : c.stages()) {
            std::reverse(gates.begin() + static_cast<std::ptrdiff_t>(stage.begin),
                         gates.begin() + static_cast<std::ptrdiff_t>(stage.end));
        }
        Circuit shuffled(c.layout());
        shuffled.append(gates);
        EXPECT_EQ(asap_depth(shuffled), asap_depth(c));
    }
}

TEST(properties, every_gate_is_an_involution) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; trial++) {
        const std::size_t width = 3 + rng() % 8;
        Gate g = test_util::random_gate(rng, width);
        BitState s = test_util::random_state(rng, width);
        BitState t = s;
        apply_gate(t, g);
        apply_gate(t, g);
        EXPECT_EQ(t, s);
    }
}

TEST(properties, built_circuits_are_bijections) {
    std::vector<Circuit> circuits = {build_ror(7), build_ror(12), build_addnop(1), build_addnop(2),
                                     build_addnop(3), build_multiplier(1), build_multiplier(2),
                                     build_controlled_ror(5, 5)};
    for (const auto &c : circuits) {
        ASSERT_LE(c.width(), 12u);
        std::set<std::uint64_t> images;
        const std::uint64_t states = std::uint64_t{1} << c.width();
        for (std::uint64_t x = 0; x < states; x++) {
            images.insert(run(c, BitState::from_bits(c.width(), x)).to_bits());
        }
        EXPECT_EQ(images.size(), states);
    }
}

TEST(properties, reversed_gate_list_uncomputes) {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 8; n++) {
        Circuit c = build_multiplier(n);
        Circuit inverse = c.reversed();
        for (int trial = 0; trial < 20; trial++) {
            BitState s = test_util::random_state(rng, c.width());
            EXPECT_EQ(run(inverse, run(c, s)), s);
        }
    }
}
