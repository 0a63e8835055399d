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

// Seeded random corpora: Haar unitaries, states, matchgates and circuits.

#pragma once

#include <cstdint>
#include <random>

#include "mgh/circuits.hpp"
#include "mgh/linalg.hpp"
#include "mgh/majorana.hpp"

namespace mgh {

using Rng = std::mt19937_64;

/// Haar-distributed unitary of size dim x dim (QR of a Ginibre matrix, phases fixed).
Matrix haar_unitary(Eigen::Index dim, Rng& rng);

StateVector random_state(int n, Rng& rng);

/// G(A,B) with Haar blocks, B rescaled by a phase so det A = det B.
Operator random_matchgate(Rng& rng);

/// Even or odd two-qubit gate whose block determinants satisfy det A / det B = e^{i phi}.
Operator planted_two_qubit(Parity parity, double phi, Rng& rng);

/// Parity-preserving Haar unitary on n qubits, multiplied by c_1 when odd is set.
Operator random_fermionic_unitary(int n, bool odd, Rng& rng);

/// Random even matchgate circuit of the given depth on nearest neighbours.
CircuitIR random_matchgate_circuit(int n, int depth, Rng& rng);

}  // namespace mgh
