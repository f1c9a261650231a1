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

#include "revmul/layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace revmul {

Line Register::line(std::size_t bit) const {
    if (bit >= size) {
        throw std::out_of_range(
            "bit " + std::to_string(bit) + " out of range for register " + name + "[" +
            std::to_string(size) + "]");
    }
    return lo + static_cast<Line>(bit);
}

RegisterLayout::RegisterLayout(std::vector<Register> registers) : registers_(std::move(registers)) {
    std::vector<const Register *> by_lo;
    for (const auto &r : registers_) {
        if (r.name.empty()) {
            throw std::invalid_argument("register with empty name");
        }
        if (r.size == 0) {
            throw std::invalid_argument("register " + r.name + " has no lines");
        }
        for (const auto &other : registers_) {
            if (&other != &r && other.name == r.name) {
                throw std::invalid_argument("duplicate register name " + r.name);
            }
        }
        by_lo.push_back(&r);
    }
    std::sort(by_lo.begin(), by_lo.end(), [](auto *a, auto *b) { return a->lo < b->lo; });
    std::size_t next = 0;
    for (const auto *r : by_lo) {
        if (r->lo < next) {
            throw std::invalid_argument("register " + r->name + " overlaps an earlier register");
        }
        if (r->lo > next) {
            throw std::invalid_argument(
                "lines " + std::to_string(next) + ".." + std::to_string(r->lo - 1) +
                " are not covered by any register");
        }
        next = r->lo + r->size;
    }
    width_ = next;
}

std::size_t RegisterLayout::ancilla_inputs() const {
    std::size_t total = 0;
    for (const auto &r : registers_) {
        if (r.role == LineRole::ancilla) {
            total += r.size;
        }
    }
    return total;
}

const Register *RegisterLayout::find(std::string_view name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

const Register &RegisterLayout::at(std::string_view name) const {
    if (const auto *r = find(name)) {
        return *r;
    }
    throw std::invalid_argument("no register named " + std::string(name));
}

const Register &RegisterLayout::owner(Line line) const {
    for (const auto &r : registers_) {
        if (r.contains(line)) {
            return r;
        }
    }
    throw std::out_of_range("line " + std::to_string(line) + " is outside the layout");
}

RegisterLayout multiplier_layout(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("multiplier width n must be >= 1");
    }
    auto w = static_cast<Line>(n);
    return RegisterLayout({
        {"A", 0, n, LineRole::data, false},
        {"B", w, n, LineRole::data, false},
        {"P", 2 * w, 2 * n, LineRole::ancilla, false},
        {"Zcin", 4 * w, 1, LineRole::ancilla, false},
    });
}

RegisterLayout addnop_layout(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("ADD/NOP width n must be >= 1");
    }
    auto w = static_cast<Line>(n);
    return RegisterLayout({
        {"A", 0, 1, LineRole::data, false},
        {"B", 1, n, LineRole::data, false},
        {"P", w + 1, n + 1, LineRole::ancilla, false},
        {"Zcin", 2 * w + 2, 1, LineRole::ancilla, false},
    });
}

RegisterLayout rotate_layout(std::size_t width) {
    if (width < 2) {
        throw std::invalid_argument("rotate width must be >= 2");
    }
    return RegisterLayout({{"P", 0, width, LineRole::data, false}});
}

}  // namespace revmul
