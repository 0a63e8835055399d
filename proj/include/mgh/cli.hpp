// Copyright 2026 The mgh Authors
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

// Command-line front end: classify, teleport, svn, parse, classes, selftest.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mgh/linalg.hpp"

namespace mgh {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitVerificationFailure = 3;

/// Gate shorthand: a named gate such as SWAP or CPHASE(pi/4), F(1,*,1),
/// CNZ(3), CCZ, FSWAP(i,j), MAJORANA(mu) or I. When n exceeds the gate's own
/// width the gate is embedded at wire `at`.
Operator gate_from_spec(const std::string& spec, std::optional<int> n = std::nullopt, int at = 1);

/// Tolerances with MGH_TOL applied to the residual threshold.
Tolerances tolerances_from_env();

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgh
