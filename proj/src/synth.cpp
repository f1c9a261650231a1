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

#include "revmul/synth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace revmul {

namespace {

std::vector<Line> register_lines(const Register &reg, std::size_t first, std::size_t count) {
    std::vector<Line> out;
    for (std::size_t i = 0; i < count; i++) {
        out.push_back(reg.line(first + i));
    }
    return out;
}

// Swap pairs of one stage of the two-reflection rotate.
void emit_reflection(Circuit &circuit, std::span<const Line> window, std::size_t i, std::size_t j,
                     std::size_t i_limit, std::size_t j_floor) {
    bool any = false;
    // j is unsigned; the loop stops before it could wrap because j_floor >= 1.
    while (i < i_limit && j >= j_floor) {
        circuit.append(swap_gate(window[i], window[j]));
        any = true;
        i++;
        j--;
    }
    if (any) {
        circuit.mark_stage();
    }
}

}  // namespace

void append_addnop(Circuit &circuit, const AddNopLines &lines) {
    const std::size_t n = lines.b.size();
    if (n < 1) {
        throw std::invalid_argument("ADD/NOP needs at least one B line");
    }
    if (lines.p.size() != n + 1) {
        throw std::invalid_argument(
            "ADD/NOP window must have n+1 = " + std::to_string(n + 1) + " lines, got " +
            std::to_string(lines.p.size()));
    }
    const auto &b = lines.b;
    const auto &p = lines.p;
    const Line ctl = lines.control;
    auto carry_line = [&](std::size_t i) { return i == 0 ? lines.zcin : b[i - 1]; };

    // Forward ripple. Each carry Fredkin shares a stage with the next half-sum
    // Toffoli; they act on disjoint lines.
    circuit.append(toffoli(ctl, b[0], p[0]));
    circuit.mark_stage();
    for (std::size_t i = 0; i < n; i++) {
        circuit.append(fredkin(p[i], b[i], carry_line(i)));
        if (i + 1 < n) {
            circuit.append(toffoli(ctl, b[i + 1], p[i + 1]));
        }
        circuit.mark_stage();
    }
    // b[n-1] now carries the final carry out.
    circuit.append(toffoli(ctl, b[n - 1], p[n]));
    circuit.mark_stage();

    // Backward sweep: uncompute each carry, then fold it into the sum bit.
    for (std::size_t k = n; k-- > 0;) {
        circuit.append(fredkin(p[k], b[k], carry_line(k)));
        circuit.mark_stage();
        circuit.append(toffoli(ctl, carry_line(k), p[k]));
        circuit.mark_stage();
    }
}

Circuit build_addnop(std::size_t n) {
    return build_addnop(n, addnop_layout(n), 0);
}

Circuit build_addnop(std::size_t n, const RegisterLayout &layout, std::size_t m) {
    if (n < 1) {
        throw std::invalid_argument("ADD/NOP width n must be >= 1");
    }
    const auto &a = layout.at("A");
    const auto &b = layout.at("B");
    const auto &p = layout.at("P");
    const auto &z = layout.at("Zcin");
    if (m >= a.size) {
        throw std::invalid_argument("control index m=" + std::to_string(m) + " outside A");
    }
    if (b.size != n) {
        throw std::invalid_argument("B must have n lines");
    }
    if (z.size != 1) {
        throw std::invalid_argument("Zcin must be a single line");
    }
    AddNopLines lines{a.line(m), register_lines(b, 0, n), {}, z.lo};
    if (p.size == n + 1) {
        lines.p = register_lines(p, 0, n + 1);
    } else if (p.size == 2 * n) {
        lines.p = register_lines(p, n - 1, n + 1);
    } else {
        throw std::invalid_argument("P must have n+1 or 2n lines");
    }
    Circuit circuit(layout);
    append_addnop(circuit, lines);
    return circuit;
}

void append_ror(Circuit &circuit, std::span<const Line> window) {
    const std::size_t k = window.size();
    if (k < 2) {
        throw std::invalid_argument("rotate width must be >= 2");
    }
    const std::size_t k1 = k / 2;
    if (k % 2 == 0) {
        emit_reflection(circuit, window, 0, k - 1, k1, k1);
        emit_reflection(circuit, window, 0, k - 2, k1 - 1, k1);
    } else {
        emit_reflection(circuit, window, 0, k - 1, k1, k1 + 1);
        emit_reflection(circuit, window, 0, k - 2, k1, k1);
    }
}

Circuit build_ror(std::size_t width) {
    Circuit circuit(rotate_layout(width));
    std::vector<Line> window(width);
    for (std::size_t i = 0; i < width; i++) {
        window[i] = static_cast<Line>(i);
    }
    append_ror(circuit, window);
    return circuit;
}

void append_controlled_ror(Circuit &circuit, Line control, std::span<const Line> window) {
    if (window.size() < 2) {
        throw std::invalid_argument("rotate width must be >= 2");
    }
    if (std::find(window.begin(), window.end(), control) != window.end()) {
        throw std::invalid_argument("control line " + std::to_string(control) + " is inside the rotated window");
    }
    for (std::size_t i = 0; i + 1 < window.size(); i++) {
        circuit.append(fredkin(control, window[i], window[i + 1]));
        circuit.mark_stage();
    }
}

Circuit build_controlled_ror(std::size_t width, Line control_line) {
    if (width < 2) {
        throw std::invalid_argument("rotate width must be >= 2");
    }
    Line window_lo;
    if (control_line == width) {
        window_lo = 0;
    } else if (control_line == 0) {
        window_lo = 1;
    } else {
        throw std::invalid_argument(
            "control line " + std::to_string(control_line) + " is inside the rotated window");
    }
    Circuit circuit(RegisterLayout({
        {"P", window_lo, width, LineRole::data, false},
        {"C", control_line, 1, LineRole::data, false},
    }));
    std::vector<Line> window(width);
    for (std::size_t i = 0; i < width; i++) {
        window[i] = window_lo + static_cast<Line>(i);
    }
    append_controlled_ror(circuit, control_line, window);
    return circuit;
}

Circuit build_multiplier(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("multiplier width n must be >= 1");
    }
    Circuit circuit(multiplier_layout(n));
    const auto &layout = circuit.layout();
    const auto &a = layout.at("A");
    const auto &b = layout.at("B");
    const auto &p = layout.at("P");
    const Line zcin = layout.at("Zcin").lo;

    const auto b_lines = register_lines(b, 0, n);
    const auto window = register_lines(p, n - 1, n + 1);
    const auto product = register_lines(p, 0, 2 * n);
    for (std::size_t m = 0; m + 1 < n; m++) {
        append_addnop(circuit, {a.line(m), b_lines, window, zcin});
        append_ror(circuit, product);
    }
    append_addnop(circuit, {a.line(n - 1), b_lines, window, zcin});
    return circuit;
}

}  // namespace revmul
