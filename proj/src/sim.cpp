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

#include "revmul/sim.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "revmul/synth.hpp"

namespace revmul {

namespace {

std::uint64_t low_mask(std::size_t bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

void require_width(std::size_t width, std::size_t limit, const char *what) {
    if (width > limit) {
        throw std::invalid_argument(
            std::string(what) + " " + std::to_string(width) + " exceeds the limit of " + std::to_string(limit));
    }
}

class ReportBuilder {
   public:
    explicit ReportBuilder(const VerifyMode &mode) {
        report_.mode = mode;
    }

    void pass() {
        report_.checked++;
    }
    void fail(Counterexample ce) {
        report_.checked++;
        report_.failures++;
        report_.ok = false;
        if (report_.counterexamples.size() < max_counterexamples) {
            report_.counterexamples.push_back(std::move(ce));
        }
    }
    VerifyReport finish() {
        if (report_.ok) {
            report_.certified_garbage_outputs = 0;
        }
        return std::move(report_);
    }

   private:
    VerifyReport report_;
};

void validate_mode(const VerifyMode &mode) {
    if (mode.kind == VerifyMode::Kind::randomized && mode.count == 0) {
        throw std::invalid_argument("randomized verification needs a positive case count");
    }
}

// Visits (a, b) pairs: every pair in exhaustive mode, `count` seeded draws otherwise.
template <typename Visit>
void for_each_operand_pair(std::size_t bits, const VerifyMode &mode, Visit &&visit) {
    const std::uint64_t mask = low_mask(bits);
    if (mode.kind == VerifyMode::Kind::exhaustive) {
        for (std::uint64_t a = 0; a <= mask; a++) {
            for (std::uint64_t b = 0; b <= mask; b++) {
                visit(a, b);
            }
        }
        return;
    }
    std::mt19937_64 rng(mode.seed);
    for (std::size_t k = 0; k < mode.count; k++) {
        std::uint64_t a = rng() & mask;
        std::uint64_t b = rng() & mask;
        visit(a, b);
    }
}

template <typename Visit>
void for_each_pattern(std::size_t bits, const VerifyMode &mode, Visit &&visit) {
    const std::uint64_t mask = low_mask(bits);
    if (mode.kind == VerifyMode::Kind::exhaustive) {
        for (std::uint64_t x = 0;; x++) {
            visit(x);
            if (x == mask) {
                break;
            }
        }
        return;
    }
    std::mt19937_64 rng(mode.seed);
    for (std::size_t k = 0; k < mode.count; k++) {
        visit(rng() & mask);
    }
}

std::uint64_t rotate_value(std::uint64_t x, std::size_t width) {
    auto bits = std::vector<bool>(width);
    for (std::size_t i = 0; i < width; i++) {
        bits[i] = (x >> i) & 1;
    }
    bits = oracle_rotate_right(std::move(bits));
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < width; i++) {
        out |= std::uint64_t{bits[i]} << i;
    }
    return out;
}

}  // namespace

BitState BitState::from_bits(std::size_t width, std::uint64_t pattern) {
    require_width(width, 64, "packed state width");
    BitState s(width);
    for (std::size_t i = 0; i < width; i++) {
        s.bits_[i] = (pattern >> i) & 1;
    }
    return s;
}

std::uint64_t BitState::to_bits() const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < bits_.size() && i < 64; i++) {
        out |= std::uint64_t{bits_[i]} << i;
    }
    return out;
}

std::string BitState::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto it = bits_.rbegin(); it != bits_.rend(); ++it) {
        out.push_back(*it ? '1' : '0');
    }
    return out;
}

void apply_gate(BitState &state, const Gate &gate) {
    const auto &q = gate.operands;
    switch (gate.kind) {
        case GateKind::cnot:
            if (state.get(q[0])) {
                state.flip(q[1]);
            }
            break;
        case GateKind::toffoli:
            if (state.get(q[0]) && state.get(q[1])) {
                state.flip(q[2]);
            }
            break;
        case GateKind::fredkin:
            if (state.get(q[0])) {
                state.swap(q[1], q[2]);
            }
            break;
        case GateKind::swap:
            state.swap(q[0], q[1]);
            break;
    }
}

BitState run(const Circuit &circuit, BitState state) {
    if (state.size() != circuit.width()) {
        throw std::invalid_argument(
            "state has " + std::to_string(state.size()) + " lines, circuit has " +
            std::to_string(circuit.width()));
    }
    for (const auto &gate : circuit.gates()) {
        apply_gate(state, gate);
    }
    return state;
}

RunResult run_traced(const Circuit &circuit, BitState state) {
    if (state.size() != circuit.width()) {
        throw std::invalid_argument(
            "state has " + std::to_string(state.size()) + " lines, circuit has " +
            std::to_string(circuit.width()));
    }
    RunResult result;
    const auto &gates = circuit.gates();
    const auto &marks = circuit.stage_marks();
    std::size_t next_mark = 0;
    for (std::size_t i = 0; i < gates.size(); i++) {
        apply_gate(state, gates[i]);
        if (next_mark < marks.size() && marks[next_mark] == i + 1) {
            result.trace.push_back(state);
            next_mark++;
        }
    }
    result.state = std::move(state);
    return result;
}

BitState load_registers(const RegisterLayout &layout, const RegisterValues &values) {
    for (const auto &[name, value] : values) {
        const auto *reg = layout.find(name);
        if (reg == nullptr) {
            throw std::invalid_argument("unknown register " + name);
        }
        require_width(reg->size, 64, ("register " + name + " width").c_str());
        if (value & ~low_mask(reg->size)) {
            throw std::invalid_argument(
                "value " + std::to_string(value) + " does not fit in register " + name + "[" +
                std::to_string(reg->size) + "]");
        }
    }
    BitState state(layout.width());
    for (const auto &reg : layout.registers()) {
        const std::pair<std::string, std::uint64_t> *assigned = nullptr;
        for (const auto &kv : values) {
            if (kv.first == reg.name) {
                assigned = &kv;
            }
        }
        if (assigned != nullptr) {
            for (std::size_t i = 0; i < reg.size; i++) {
                state.set(reg.line(i), (assigned->second >> i) & 1);
            }
        } else if (reg.role == LineRole::ancilla) {
            for (std::size_t i = 0; i < reg.size; i++) {
                state.set(reg.line(i), reg.constant);
            }
        } else {
            throw std::invalid_argument("missing input assignment for register " + reg.name);
        }
    }
    return state;
}

std::uint64_t read_register(const BitState &state, const Register &reg) {
    require_width(reg.size, 64, ("register " + reg.name + " width").c_str());
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < reg.size; i++) {
        out |= std::uint64_t{state.get(reg.line(i))} << i;
    }
    return out;
}

RegisterValues read_registers(const BitState &state, const RegisterLayout &layout) {
    RegisterValues out;
    for (const auto &reg : layout.registers()) {
        out.emplace_back(reg.name, read_register(state, reg));
    }
    return out;
}

std::uint64_t oracle_multiply(std::size_t n, std::uint64_t a, std::uint64_t b) {
    if (n < 1 || n > 32) {
        throw std::invalid_argument("oracle_multiply supports 1 <= n <= 32");
    }
    if ((a | b) & ~low_mask(n)) {
        throw std::invalid_argument("operand does not fit in n bits");
    }
    const std::size_t width = 2 * n;
    const std::uint64_t full = low_mask(width);
    const std::uint64_t below_window = low_mask(n - 1);
    std::uint64_t p = 0;
    auto add_into_window = [&] {
        // P[2n-1 : n-1] += B
        std::uint64_t window = (p >> (n - 1)) + b;
        p = (p & below_window) | ((window << (n - 1)) & full);
    };
    for (std::size_t i = 0; i + 1 < n; i++) {
        if ((a >> i) & 1) {
            add_into_window();
        }
        p = ((p >> 1) | ((p & 1) << (width - 1))) & full;
    }
    if ((a >> (n - 1)) & 1) {
        add_into_window();
    }
    return p;
}

std::vector<bool> oracle_rotate_right(std::vector<bool> bits) {
    if (bits.size() < 2) {
        throw std::invalid_argument("rotate needs at least two bits");
    }
    std::vector<bool> out(bits.size());
    for (std::size_t p = 1; p < bits.size(); p++) {
        out[p - 1] = bits[p];
    }
    out.back() = bits[0];
    return out;
}

VerifyReport verify_multiplier(std::size_t n, const VerifyMode &mode) {
    if (n < 1) {
        throw std::invalid_argument("multiplier width n must be >= 1");
    }
    return verify_multiplier(build_multiplier(n), n, mode);
}

VerifyReport verify_multiplier(const Circuit &circuit, std::size_t n, const VerifyMode &mode) {
    validate_mode(mode);
    if (mode.kind == VerifyMode::Kind::exhaustive) {
        require_width(n, 6, "exhaustive verification operand width");
    }
    require_width(n, 32, "operand width");
    const auto &layout = circuit.layout();
    if (layout != multiplier_layout(n)) {
        throw std::invalid_argument("circuit does not use the multiplier layout for n=" + std::to_string(n));
    }
    const auto &reg_a = layout.at("A");
    const auto &reg_b = layout.at("B");
    const auto &reg_p = layout.at("P");
    const auto &reg_z = layout.at("Zcin");

    ReportBuilder builder(mode);
    for_each_operand_pair(n, mode, [&](std::uint64_t a, std::uint64_t b) {
        const std::uint64_t product = a * b;
        const std::uint64_t behavioural = oracle_multiply(n, a, b);
        BitState out = run(circuit, load_registers(layout, {{"A", a}, {"B", b}}));
        const std::uint64_t got_p = read_register(out, reg_p);
        const std::uint64_t got_a = read_register(out, reg_a);
        const std::uint64_t got_b = read_register(out, reg_b);
        const std::uint64_t got_z = read_register(out, reg_z);
        if (got_p == product && behavioural == product && got_a == a && got_b == b && got_z == 0) {
            builder.pass();
        } else {
            builder.fail({{{"A", a}, {"B", b}},
                          {{"P", product}, {"A", a}, {"B", b}, {"Zcin", 0}},
                          {{"P", got_p}, {"A", got_a}, {"B", got_b}, {"Zcin", got_z}, {"oracle", behavioural}}});
        }
    });
    return builder.finish();
}

VerifyReport verify_addnop(std::size_t n, const VerifyMode &mode) {
    validate_mode(mode);
    if (mode.kind == VerifyMode::Kind::exhaustive) {
        require_width(n, 6, "exhaustive verification operand width");
    }
    require_width(n, 32, "operand width");
    const Circuit circuit = build_addnop(n);
    const auto &layout = circuit.layout();
    const auto &reg_b = layout.at("B");
    const auto &reg_p = layout.at("P");
    const auto &reg_z = layout.at("Zcin");
    const std::uint64_t window_mask = low_mask(n + 1);

    ReportBuilder builder(mode);
    auto check = [&](std::uint64_t control, std::uint64_t b, std::uint64_t p) {
        BitState out = run(circuit, load_registers(layout, {{"A", control}, {"B", b}, {"P", p}}));
        const std::uint64_t expected_p = control ? (p + b) & window_mask : p;
        const std::uint64_t got_a = read_register(out, layout.at("A"));
        const std::uint64_t got_b = read_register(out, reg_b);
        const std::uint64_t got_p = read_register(out, reg_p);
        const std::uint64_t got_z = read_register(out, reg_z);
        if (got_p == expected_p && got_a == control && got_b == b && got_z == 0) {
            builder.pass();
        } else {
            builder.fail({{{"A", control}, {"B", b}, {"P", p}},
                          {{"P", expected_p}, {"A", control}, {"B", b}, {"Zcin", 0}},
                          {{"P", got_p}, {"A", got_a}, {"B", got_b}, {"Zcin", got_z}}});
        }
    };
    // With the control set, the top window bit must enter clear.
    for_each_operand_pair(n, mode, [&](std::uint64_t b, std::uint64_t p) {
        check(1, b, p);
        check(0, b, p);
        check(0, b, p | (std::uint64_t{1} << n));
    });
    return builder.finish();
}

VerifyReport verify_rotate(std::size_t width, const VerifyMode &mode) {
    validate_mode(mode);
    if (width < 2) {
        throw std::invalid_argument("rotate width must be >= 2");
    }
    require_width(width, mode.kind == VerifyMode::Kind::exhaustive ? 20 : 64, "rotate width");
    const Circuit circuit = build_ror(width);
    ReportBuilder builder(mode);
    for_each_pattern(width, mode, [&](std::uint64_t x) {
        const std::uint64_t expected = rotate_value(x, width);
        const std::uint64_t got = run(circuit, BitState::from_bits(width, x)).to_bits();
        if (got == expected) {
            builder.pass();
        } else {
            builder.fail({{{"P", x}}, {{"P", expected}}, {{"P", got}}});
        }
    });
    return builder.finish();
}

VerifyReport verify_controlled_rotate(std::size_t width, const VerifyMode &mode) {
    validate_mode(mode);
    if (width < 2) {
        throw std::invalid_argument("rotate width must be >= 2");
    }
    require_width(width, mode.kind == VerifyMode::Kind::exhaustive ? 20 : 63, "rotate width");
    const Circuit circuit = build_controlled_ror(width, static_cast<Line>(width));
    const auto &layout = circuit.layout();
    const auto &reg_p = layout.at("P");
    const auto &reg_c = layout.at("C");
    ReportBuilder builder(mode);
    for_each_pattern(width, mode, [&](std::uint64_t x) {
        for (std::uint64_t control : {0, 1}) {
            const std::uint64_t expected = control ? rotate_value(x, width) : x;
            BitState out = run(circuit, load_registers(layout, {{"P", x}, {"C", control}}));
            const std::uint64_t got = read_register(out, reg_p);
            const std::uint64_t got_c = read_register(out, reg_c);
            if (got == expected && got_c == control) {
                builder.pass();
            } else {
                builder.fail({{{"P", x}, {"C", control}},
                              {{"P", expected}, {"C", control}},
                              {{"P", got}, {"C", got_c}}});
            }
        }
    });
    return builder.finish();
}

}  // namespace revmul
