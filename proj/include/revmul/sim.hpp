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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revmul/circuit.hpp"

namespace revmul {

/// One classical bit per circuit line.
class BitState {
   public:
    BitState() = default;
    explicit BitState(std::size_t width) : bits_(width, 0) {}
    /// Lines [0, width) from the low bits of `pattern` (width <= 64).
    static BitState from_bits(std::size_t width, std::uint64_t pattern);

    std::size_t size() const {
        return bits_.size();
    }
    bool get(Line line) const {
        return bits_[line] != 0;
    }
    void set(Line line, bool value) {
        bits_[line] = value ? 1 : 0;
    }
    void flip(Line line) {
        bits_[line] ^= 1;
    }
    void swap(Line a, Line b) {
        std::swap(bits_[a], bits_[b]);
    }
    /// Low 64 lines packed LSB first.
    std::uint64_t to_bits() const;
    /// MSB-first string, e.g. "10000" for line 4 set.
    std::string to_string() const;

    bool operator==(const BitState &) const = default;
    auto operator<=>(const BitState &) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

void apply_gate(BitState &state, const Gate &gate);

struct RunResult {
    BitState state;
    std::vector<BitState> trace;  // state after each marked stage, when requested
};

/// Applies every gate in order. Throws std::invalid_argument if the state
/// width differs from the circuit width.
BitState run(const Circuit &circuit, BitState state);
RunResult run_traced(const Circuit &circuit, BitState state);

/// Named register values, LSB = register bit 0.
using RegisterValues = std::vector<std::pair<std::string, std::uint64_t>>;

/// Builds an entry state: ancilla registers take their constant unless
/// overridden in `values`; every data register must be assigned. Throws
/// std::invalid_argument naming the first missing or unknown register, or a
/// value that does not fit.
BitState load_registers(const RegisterLayout &layout, const RegisterValues &values);
std::uint64_t read_register(const BitState &state, const Register &reg);
/// All registers in layout order.
RegisterValues read_registers(const BitState &state, const RegisterLayout &layout);

/// Register-level add-and-rotate multiplication without gates. Throws
/// std::invalid_argument for n outside [1, 32] or operands >= 2^n.
std::uint64_t oracle_multiply(std::size_t n, std::uint64_t a, std::uint64_t b);

/// Bit p moves to p-1 and bit 0 moves to the top. Requires bits.size() >= 2.
std::vector<bool> oracle_rotate_right(std::vector<bool> bits);

struct VerifyMode {
    enum class Kind { exhaustive, randomized };
    Kind kind = Kind::exhaustive;
    std::size_t count = 0;
    std::uint64_t seed = 0;

    static VerifyMode exhaustive() {
        return {};
    }
    static VerifyMode randomized(std::size_t count, std::uint64_t seed) {
        return {Kind::randomized, count, seed};
    }
};

inline constexpr std::size_t default_random_count = 1000;
inline constexpr std::size_t max_counterexamples = 16;

struct Counterexample {
    RegisterValues input;
    RegisterValues expected;
    RegisterValues got;
};

struct VerifyReport {
    bool ok = true;
    std::uint64_t checked = 0;
    VerifyMode mode;
    std::vector<Counterexample> counterexamples;  // at most max_counterexamples
    std::uint64_t failures = 0;
    std::optional<std::uint64_t> certified_garbage_outputs;
};

/// Simulates build_multiplier(n) for every (a, b) of the mode: A=a, B=b,
/// P=0, Zcin=0 on entry; requires P = a*b = oracle_multiply(n, a, b), A = a,
/// B = b, Zcin = 0 on exit. Exhaustive mode requires n <= 6.
VerifyReport verify_multiplier(std::size_t n, const VerifyMode &mode);
/// Same checks against a caller-supplied circuit on multiplier_layout(n).
VerifyReport verify_multiplier(const Circuit &circuit, std::size_t n, const VerifyMode &mode);

/// Standalone controlled adder: for control in {0,1}, every B and every P
/// window with a clear top bit (any window when control = 0). Exhaustive
/// mode requires n <= 6.
VerifyReport verify_addnop(std::size_t n, const VerifyMode &mode);

/// build_ror(width) against oracle_rotate_right. Exhaustive mode requires
/// width <= 20; randomized mode requires width <= 64.
VerifyReport verify_rotate(std::size_t width, const VerifyMode &mode);

/// build_controlled_ror(width, width) against the oracle gated on the
/// control line (both control values per tested pattern).
VerifyReport verify_controlled_rotate(std::size_t width, const VerifyMode &mode);

}  // namespace revmul
