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
#include <span>
#include <vector>

#include "revmul/circuit.hpp"

namespace revmul {

/// Lines consumed by one controlled-adder block.
struct AddNopLines {
    Line control;             // multiplier bit A[m]
    std::vector<Line> b;      // n lines, LSB first
    std::vector<Line> p;      // n+1 line window, LSB first; p.back() takes the carry out
    Line zcin;                // carry-in ancilla, enters and exits 0
};

/// Appends the controlled adder (ADD/NOP) over `lines`.
///
/// With control = 1 and p.back() = 0 on entry, the window becomes p + b.
/// With control = 0 every line is unchanged. B and Zcin always exit with their
/// entry values (Zcin must enter 0).
///
/// Emits 2n+1 Toffoli and 2n Fredkin gates in 3n+2 stages:
///   forward ripple   T0 | F0 T1 | F1 T2 | ... | F(n-1) | carry-out T
///   backward sweep   F(n-1) | S(n-1) | ... | F0 | S0
/// where Ti writes the half sum into p[i], Fi moves the carry into b[i] and Si
/// adds the carry into p[i]. The carry into bit i rides on zcin for i = 0 and
/// on b[i-1] otherwise.
void append_addnop(Circuit &circuit, const AddNopLines &lines);

/// Standalone block on addnop_layout(n), controlled by A[0].
Circuit build_addnop(std::size_t n);

/// Block wired into an existing layout with registers A, B, P and Zcin.
/// P may be either the n+1 line window itself or the 2n line product register,
/// in which case the window is P[n-1..2n-1]. Controlled by A[m].
Circuit build_addnop(std::size_t n, const RegisterLayout &layout, std::size_t m);

/// Appends a rotate-right-by-one over `window` (window[0] is the LSB) as two
/// layers of disjoint swaps, each followed by a stage mark. Bit p moves to p-1
/// and bit 0 moves to the top.
void append_ror(Circuit &circuit, std::span<const Line> window);

/// Rotate-right on rotate_layout(width). Throws for width < 2.
Circuit build_ror(std::size_t width);

/// Appends the controlled rotate: width-1 Fredkin gates sharing `control`,
/// one per stage. Rotates iff control is 1.
void append_controlled_ror(Circuit &circuit, Line control, std::span<const Line> window);

/// Controlled rotate on width+1 lines. control_line must be 0 (window on
/// lines 1..width) or width (window on lines 0..width-1).
Circuit build_controlled_ror(std::size_t width, Line control_line);

/// n x n add-and-rotate multiplier on multiplier_layout(n): for m = 0..n-2 a
/// controlled add on the upper window followed by a rotate of all of P, then a
/// final controlled add for m = n-1.
Circuit build_multiplier(std::size_t n);

}  // namespace revmul
