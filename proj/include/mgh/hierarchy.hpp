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

// Membership tests for the levels of the generalised matchgate hierarchy.
//
// Level 1 holds the unit-norm real combinations sum_mu a_mu c_mu. A unitary is
// in level k+1 when it conjugates every c_mu to an odd operator of level k.
// The recursive test costs (2n)^(k-1) dense conjugations; two-qubit gates
// also have a closed form in terms of det A / det B.

#pragma once

#include <optional>
#include <vector>

#include "mgh/linalg.hpp"
#include "mgh/majorana.hpp"

namespace mgh {

inline constexpr double kDefaultAngleTol = 1e-8;
inline constexpr int kDefaultKMax = 8;
/// Refuse recursive membership checks needing more dense conjugations than this.
inline constexpr double kMaxConjugations = 1e7;

std::vector<Operator> conjugate_majoranas(const Operator& u);

struct FirstLevelCoeffs {
    RealVector a;
    double residual = 0.0;
};

std::optional<FirstLevelCoeffs> first_level_coeffs(const Operator& u, const Tolerances& tol = {});

/// R(mu,nu) = Re tr(c_nu U c_mu U^dag) / 2^n, returned only when every
/// conjugated Majorana is reproduced and R is orthogonal within tol.residual.
std::optional<RealMatrix> extract_rotation(const Operator& u, const Tolerances& tol = {});

/// Lambda_n = sum_k c_k (x) c_k on 2n qubits.
struct LambdaOperator {
    int n_modes = 0;
    Operator matrix = Operator::identity(1);
};

LambdaOperator lambda_operator(int n);

/// Lambda_n applied to a 2n-qubit state without forming the matrix.
StateVector apply_lambda(int n, const StateVector& psi);

/// [Lambda_n, U (x) U] = 0. Throws std::invalid_argument for a non-fermionic U.
bool is_gaussian_lambda(const Operator& u, const Tolerances& tol = {});
double lambda_commutator_residual(const Operator& u);

/// Lambda_n psi (x) psi = 0 for an n-qubit psi.
bool is_gaussian_state_lambda(const StateVector& psi, const Tolerances& tol = {});

struct MembershipResult {
    bool member = false;
    double worst_residual = 0.0;  // largest residual that was checked against a tolerance
};

/// Throws std::invalid_argument for k < 1 or a non-unitary input at k >= 2, and
/// std::length_error when (2n)^(k-1) exceeds kMaxConjugations.
MembershipResult level_membership_detail(const Operator& u, int k, const Tolerances& tol = {});
bool level_membership(const Operator& u, int k, const Tolerances& tol = {});

std::optional<int> min_level(const Operator& u, int k_max = kDefaultKMax, const Tolerances& tol = {});

struct TwoQubitBlocks {
    Parity parity = Parity::None;
    Operator a = Operator::identity(1);
    Operator b = Operator::identity(1);
    double residual = 0.0;
};

/// Splits a fermionic two-qubit unitary into G(A,B) or J(A,B) blocks.
/// Throws std::invalid_argument for mixed parity or n != 2.
TwoQubitBlocks two_qubit_decompose(const Operator& u, const Tolerances& tol = {});

struct TwoQubitLevel {
    std::optional<int> level;  // absent: det ratio is not a 2^m-th root of unity for m <= 30
    double phi = 0.0;          // arg(det A / det B) in [0, 2pi)
};

TwoQubitLevel two_qubit_min_level(const Operator& u, const Tolerances& tol = {},
                                  double angle_tol = kDefaultAngleTol);

struct EquivClass {
    double phi = 0.0;              // [0, 2pi)
    double generalised_phi = 0.0;  // [0, pi]
    Operator representative = Operator::identity(2);  // C_phi
};

EquivClass equiv_class(const Operator& u, const Tolerances& tol = {});

struct TwoQubitSummary {
    Complex det_a;
    Complex det_b;
    double phi = 0.0;
    std::optional<int> level_closed_form;
    double class_representative_phi = 0.0;  // generalised phase in [0, pi]
};

struct HierarchyReport {
    int n_qubits = 0;
    Parity parity = Parity::None;
    bool is_gaussian = false;
    std::optional<RealMatrix> rotation;
    std::optional<int> rotation_det;
    std::optional<int> min_level;
    int k_max = kDefaultKMax;
    double worst_residual = 0.0;
    std::optional<TwoQubitSummary> two_qubit;
};

/// Runs every check above. Membership beyond what the cost guard allows is
/// reported as an absent min_level.
HierarchyReport classify(const Operator& u, int k_max = kDefaultKMax, const Tolerances& tol = {});

}  // namespace mgh
