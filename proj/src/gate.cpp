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

#include "revmul/gate.hpp"

namespace revmul {

std::string_view mnemonic(GateKind kind) {
    switch (kind) {
        case GateKind::cnot:
            return "cx";
        case GateKind::toffoli:
            return "ccx";
        case GateKind::fredkin:
            return "cswap";
        case GateKind::swap:
            return "swap";
    }
    return "?";
}

bool Gate::has_distinct_lines() const {
    auto ls = lines();
    for (std::size_t i = 0; i < ls.size(); i++) {
        for (std::size_t j = i + 1; j < ls.size(); j++) {
            if (ls[i] == ls[j]) {
                return false;
            }
        }
    }
    return true;
}

bool Gate::touches(Line line) const {
    for (Line l : lines()) {
        if (l == line) {
            return true;
        }
    }
    return false;
}

}  // namespace revmul
