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

// Gate teleportation through a matchgate magic state.
//
// Joint register: input wires 1..n, magic-state wires n+1..3n. After B^(n)^dag
// on wires 1..2n every outcome z of those wires leaves U K_z psi on the last n
// wires, and R_z = U K_z^dag U^dag undoes the by-product exactly.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgh/hierarchy.hpp"
#include "mgh/linalg.hpp"
#include "mgh/majorana.hpp"

namespace mgh {

struct MagicState {
    int n = 0;  // gate arity
    StateVector psi = StateVector::basis(1, 0);
    std::string gate_label;
    Parity parity = Parity::None;
    bool is_gaussian = false;
};

/// (1 (x) U) B^(n) |0...0>. Throws std::invalid_argument for a non-unitary or
/// non-fermionic U.
MagicState magic_state(const Operator& u, const std::string& label = "", const Tolerances& tol = {});

/// Outcome bits z_1..z_2n packed with z_1 as the most significant bit.
using Outcome = std::uint64_t;

int outcome_bit(Outcome z, int index, int n);

/// By-product operator K_z on n qubits: a phase times c_1^{z_2} c_2^{z_1} ... c_{2n}^{z_{2n-1}}.
Operator correction_K(Outcome z, int n);
/// R_z = U K_z^dag U^dag.
Operator correction_R(Outcome z, const Operator& u);

struct Branch {
    Outcome z = 0;
    double probability = 0.0;
    StateVector raw_state = StateVector::basis(1, 0);  // normalized
    Operator correction = Operator::identity(1);
    StateVector corrected = StateVector::basis(1, 0);
    double residual_vs_target = 0.0;
    Complex phase{1.0, 0.0};  // corrected ~ phase * target
};

struct TeleportTranscript {
    int n = 0;
    StateVector input = StateVector::basis(1, 0);
    Operator gate = Operator::identity(1);
    std::vector<Branch> branches;  // ascending z

    double max_residual() const;
    double max_probability_deviation() const;
};

/// Enumerates all 4^n outcomes. Throws std::invalid_argument on a dimension
/// mismatch or bad input, std::runtime_error if a branch vanishes.
TeleportTranscript simulate_protocol(const Operator& u, const StateVector& psi_in, const Tolerances& tol = {});

struct ProtocolSummary {
    int n = 0;
    int trials = 0;
    std::size_t branches_per_trial = 0;
    double max_residual = 0.0;
    double max_probability_deviation = 0.0;
    std::size_t distinct_corrections = 0;
    std::map<int, int> correction_levels;  // min_level -> count of distinct corrections
    int corrections_unresolved = 0;        // no level found up to correction_k_max
    int correction_k_max = 0;
    bool pass = false;
};

inline constexpr int kDefaultCorrectionKMax = 5;

ProtocolSummary verify_protocol(const Operator& u, int trials, std::uint64_t seed,
                                int correction_k_max = kDefaultCorrectionKMax, const Tolerances& tol = {});

}  // namespace mgh
