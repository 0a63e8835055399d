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

#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "mgh/linalg.hpp"

namespace mgh {

/// Bit mu-1 set <=> c_mu present. Factors are always multiplied in ascending mu.
using MonomialMask = std::uint64_t;

/// Jordan-Wigner Majorana c_mu on n qubits, mu in 1..2n:
///   c_{2k-1} = Z_1...Z_{k-1} X_k,   c_{2k} = Z_1...Z_{k-1} Y_k.
Operator jw_majorana(int n, int mu);

/// A Majorana monomial is a phased permutation matrix:
/// M|j> = phase[j] |j xor flip>.
struct MonomialAction {
    std::uint64_t flip = 0;
    std::vector<Complex> phase;
};

MonomialAction monomial_action(int n, MonomialMask mask);

/// Ordered product c_{mu_1} ... c_{mu_m} with mu_1 < ... < mu_m. Empty mask is 1.
Operator majorana_monomial(int n, MonomialMask mask);

MonomialMask mask_from_indices(const std::vector<int>& mus);
std::vector<int> indices_from_mask(MonomialMask mask);

/// monomial(a) * monomial(b) = sign * monomial(a xor b); the sign counts the
/// transpositions needed to sort the concatenated factor list.
int monomial_product_sign(MonomialMask a, MonomialMask b);

/// Sparse expansion sum_m alpha_m c^m over the 4^n monomials.
struct MajoranaPoly {
    int n_modes = 0;
    std::map<MonomialMask, Complex> terms;
};

/// alpha_m = tr(monomial(m)^dag U) / 2^n, dropping |alpha_m| < tol.norm.
/// One sparse trace per mask, so this is O(8^n) overall.
MajoranaPoly expand(const Operator& u, const Tolerances& tol = {});

Operator poly_to_operator(const MajoranaPoly& p);

enum class Parity { Even, Odd, None };

std::string_view to_string(Parity p);

struct ParityParts {
    Operator even;
    Operator odd;
};

/// M_E = (M + P M P)/2, M_O = (M - P M P)/2 with P = Z^(x)n.
ParityParts parity_decompose(const Operator& m);

Parity parity_of(const Operator& m, const Tolerances& tol = {});
Parity state_parity(const StateVector& psi, const Tolerances& tol = {});

/// A candidate tuple of 2n Majorana operators.
struct CarSet {
    int n_modes = 0;
    std::vector<Operator> ops;
};

CarSet jw_set(int n);

struct CarReport {
    bool pass = false;
    double max_residual = 0.0;      // over {c_mu, c_nu} - 2 delta 1
    double hermitian_residual = 0.0;
    double unitary_residual = 0.0;
    int worst_mu = 0;               // 1-based pair with the largest anticommutator residual
    int worst_nu = 0;
};

/// Throws std::invalid_argument unless ops.size() == 2 n_modes and every
/// operator lives on n_modes qubits.
CarReport check_car(const CarSet& s, const Tolerances& tol = {});

}  // namespace mgh
