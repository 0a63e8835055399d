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

// End-to-end acceptance corpus shared by the test suite and `mgh selftest`.

#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace mgh {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

inline constexpr std::uint64_t kAcceptanceSeed = 20260417;

CriterionResult criterion_car(std::uint64_t seed);
CriterionResult criterion_gaussian_equivalence(std::uint64_t seed);
CriterionResult criterion_canonical_levels(std::uint64_t seed);
CriterionResult criterion_closed_form(std::uint64_t seed);
CriterionResult criterion_equivalence_classes(std::uint64_t seed);
CriterionResult criterion_teleport_two(std::uint64_t seed);
CriterionResult criterion_teleport_three(std::uint64_t seed);
CriterionResult criterion_magic_parity(std::uint64_t seed);
CriterionResult criterion_svn(std::uint64_t seed);
CriterionResult criterion_closure(std::uint64_t seed);

using CriterionFn = std::function<CriterionResult(std::uint64_t)>;
const std::vector<CriterionFn>& acceptance_criteria();

/// Runs every criterion and prints one "[PASS]" or "[FAIL]" line per criterion.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& out);

std::string format_result(const CriterionResult& r);

}  // namespace mgh
