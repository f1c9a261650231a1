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

#include "revmul/gate.hpp"
#include "revmul/layout.hpp"

namespace revmul {

/// Half-open gate index range [begin, end) forming one stage.
struct StageRange {
    std::size_t begin;
    std::size_t end;
};

/// An ordered gate list over the lines of a register layout.
///
/// Stage marks record positions in the gate list; mark k closes the stage
/// that ends just before gate index marks[k]. Gate order is execution order.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(RegisterLayout layout);

    const RegisterLayout &layout() const {
        return layout_;
    }
    std::size_t width() const {
        return layout_.width();
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }
    const std::vector<std::size_t> &stage_marks() const {
        return stage_marks_;
    }

    /// Throws std::invalid_argument on repeated or out-of-range lines.
    Circuit &append(const Gate &gate);
    Circuit &append(std::span<const Gate> gates);

    /// Closes a stage after the current last gate. Throws std::logic_error if
    /// no gate was appended since the previous mark.
    Circuit &mark_stage();

    /// Number of closed (marked) stages.
    std::size_t stage_count() const {
        return stage_marks_.size();
    }
    std::vector<StageRange> stages() const;
    /// Gates after the last mark, which belong to no stage.
    std::size_t unstaged_tail() const;

    /// Same gates in reverse order, no stage marks. Since every gate is
    /// self-inverse this is the inverse circuit.
    Circuit reversed() const;

    /// Copy with gate `index` dropped and stage marks discarded.
    Circuit without_gate(std::size_t index) const;

    bool operator==(const Circuit &) const = default;

   private:
    RegisterLayout layout_;
    std::vector<Gate> gates_;
    std::vector<std::size_t> stage_marks_;
};

}  // namespace revmul
