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
#include <iosfwd>
#include <string>
#include <vector>

#include "revmul/sim.hpp"

namespace revmul::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Environment variable consulted for the default random seed.
inline constexpr const char *seed_env_var = "REVMUL_SEED";
inline constexpr std::uint64_t fallback_seed = 42;

/// Parses "A=3,B=0x1f" (or several such words) into register assignments.
/// Accepts decimal, 0x and 0b values. Throws std::invalid_argument.
RegisterValues parse_assignments(const std::vector<std::string> &words);

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace revmul::cli
