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

#include "revmul/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace revmul {

Circuit::Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

Circuit &Circuit::append(const Gate &gate) {
    for (Line l : gate.lines()) {
        if (l >= width()) {
            throw std::invalid_argument(
                std::string(mnemonic(gate.kind)) + " line " + std::to_string(l) +
                " out of range for width " + std::to_string(width()));
        }
    }
    if (!gate.has_distinct_lines()) {
        throw std::invalid_argument(std::string(mnemonic(gate.kind)) + " uses the same line twice");
    }
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(std::span<const Gate> gates) {
    for (const auto &g : gates) {
        append(g);
    }
    return *this;
}

Circuit &Circuit::mark_stage() {
    std::size_t last = stage_marks_.empty() ? 0 : stage_marks_.back();
    if (gates_.size() == last) {
        throw std::logic_error("empty stage: no gate since the previous stage mark");
    }
    stage_marks_.push_back(gates_.size());
    return *this;
}

std::vector<StageRange> Circuit::stages() const {
    std::vector<StageRange> out;
    std::size_t begin = 0;
    for (std::size_t end : stage_marks_) {
        out.push_back({begin, end});
        begin = end;
    }
    return out;
}

std::size_t Circuit::unstaged_tail() const {
    return gates_.size() - (stage_marks_.empty() ? 0 : stage_marks_.back());
}

Circuit Circuit::reversed() const {
    Circuit out(layout_);
    out.gates_.assign(gates_.rbegin(), gates_.rend());
    return out;
}

Circuit Circuit::without_gate(std::size_t index) const {
    if (index >= gates_.size()) {
        throw std::out_of_range("gate index " + std::to_string(index) + " out of range");
    }
    Circuit out(layout_);
    out.gates_ = gates_;
    out.gates_.erase(out.gates_.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

}  // namespace revmul
