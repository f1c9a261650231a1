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
#include <optional>
#include <string>
#include <vector>

#include "revmul/gate.hpp"

namespace revmul {

enum class LineRole : std::uint8_t {
    data,
    ancilla,
};

/// A named, contiguous bit range. Bit 0 of the register is its least
/// significant bit and sits on line `lo`.
struct Register {
    std::string name;
    Line lo = 0;
    std::size_t size = 0;
    LineRole role = LineRole::data;
    bool constant = false;  // Entry value of every line when role is ancilla.

    Line hi() const {
        return lo + static_cast<Line>(size) - 1;
    }
    Line line(std::size_t bit) const;
    bool contains(Line l) const {
        return l >= lo && l < lo + size;
    }
    bool operator==(const Register &) const = default;
};

/// Registers covering exactly [0, width) with no overlap.
class RegisterLayout {
   public:
    RegisterLayout() = default;

    /// Throws std::invalid_argument if registers overlap, leave a gap, are
    /// empty, or reuse a name.
    explicit RegisterLayout(std::vector<Register> registers);

    std::size_t width() const {
        return width_;
    }
    const std::vector<Register> &registers() const {
        return registers_;
    }

    /// Number of lines whose role is ancilla.
    std::size_t ancilla_inputs() const;

    const Register *find(std::string_view name) const;
    /// Like find() but throws std::invalid_argument when absent.
    const Register &at(std::string_view name) const;
    const Register &owner(Line line) const;

    bool operator==(const RegisterLayout &) const = default;

   private:
    std::vector<Register> registers_;
    std::size_t width_ = 0;
};

/// Multiplier wiring: A[0..n) at 0, B at n, P[0..2n) at 2n, Zcin at 4n.
/// P and Zcin are ancillas initialised to 0.
RegisterLayout multiplier_layout(std::size_t n);

/// Standalone ADD/NOP wiring: A (1 line, the control), B (n), P (n+1 line
/// window, ancilla 0), Zcin (ancilla 0). Width 2n+3.
RegisterLayout addnop_layout(std::size_t n);

/// A single data register P spanning `width` lines.
RegisterLayout rotate_layout(std::size_t width);

}  // namespace revmul
