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

// Matchgate circuits.
//
// Text format, one statement per line, '#' starts a comment, names are
// case-insensitive:
//
//   qubits 4
//   allow freeform          # optional; admits non-matchgate G/J and named gates
//   G H H @ 1               # G(A,B) on wires [1,2]
//   J X -i*Z @ 2            # J(A,B); blocks take an optional -, i* or -i* prefix
//   FSWAP @ 3               # named two-qubit gate on wires [3,4]
//   CPHASE(pi/4) @ 1
//   X @ 1                   # single-qubit gate on wire 1
//
// Gates are listed in time order: the first line is applied first, so the
// circuit unitary is g_m ... g_2 g_1.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mgh/linalg.hpp"

namespace mgh {

/// A 2x2 block for G(A,B)/J(A,B): prefactor * NAME(params).
struct BlockSpec {
    std::string name;  // I, X, Y, Z, H, P, RX, RY, RZ
    std::vector<double> params;
    Complex prefactor{1.0, 0.0};  // one of 1, -1, i, -i
};

enum class GateKind { G, J, Named };

struct GateApp {
    GateKind kind = GateKind::Named;
    std::string name;  // canonical upper-case name for Named gates
    std::vector<double> params;
    std::optional<BlockSpec> block_a;
    std::optional<BlockSpec> block_b;
    int pos = 1;            // first wire, 1-based
    bool freeform = false;  // not a (generalised) matchgate

    int arity() const;
};

struct CircuitIR {
    int n_qubits = 0;
    bool allow_freeform = false;
    std::vector<GateApp> gates;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Angle token: decimal radians, or [-][K*]pi[/M].
double parse_angle(std::string_view token);

/// Single-qubit names I X Y Z H P(phi) RX RY RZ and two-qubit names
/// FSWAP GHH SWAP CZ CPHASE(phi). P(phi) = diag(1, e^{i phi}); RX(t) = exp(-i t X / 2).
/// Throws std::invalid_argument on an unknown name or wrong parameter count.
Operator named_gate(std::string_view name, const std::vector<double>& params = {});

Operator block_operator(const BlockSpec& b);

/// Even layout: A on span{|00>,|11>}, B on span{|01>,|10>}.
Operator build_G(const Operator& a, const Operator& b, const Tolerances& tol = {});
/// Odd layout: A maps {|01>,|10>} onto {|00>,|11>}, B maps {|00>,|11>} onto {|01>,|10>}.
Operator build_J(const Operator& a, const Operator& b, const Tolerances& tol = {});

/// Local 1- or 2-qubit matrix of a gate application.
Operator gate_operator(const GateApp& g);

CircuitIR parse_circuit(std::string_view text, const Tolerances& tol = {});

/// Canonical text; parse_circuit(to_text(c)) reproduces c and to_text is a fixed point.
std::string to_text(const CircuitIR& c);

Operator circuit_to_operator(const CircuitIR& c);

/// Composed rotation R with U c_mu U^dag = sum_nu R(mu,nu) c_nu. Gates compose
/// as R = R_1 R_2 ... R_m in time order. Throws std::invalid_argument on a
/// free-form gate.
RealMatrix circuit_to_rotation(const CircuitIR& c, const Tolerances& tol = {});

/// B^(n) on 2n qubits: G(H,H) on every pair [2k-1,2k], then the fermionic-swap
/// triangle that lists odd wires before even ones. n(n-1)/2 fSWAPs.
CircuitIR build_Bn(int n);

enum class Trit { Zero, One, Star };
using Pattern = std::vector<Trit>;

/// Parses "1,*,0" (commas optional).
Pattern parse_pattern(std::string_view text);
std::string pattern_to_string(const Pattern& y);
int pattern_length(const Pattern& y);
bool pattern_matches(const Pattern& y, std::uint64_t z, int n);

/// F_y|z> = (-1)^[y matches z] |z>. Every z matches the all-star pattern, so that gives -1.
Operator build_F(const Pattern& y);
/// C^{n-1}Z = F_{1^n}.
Operator build_CnZ(int n);

/// Fermionic swap of two arbitrary wires: |..x_i..x_j..> -> (-1)^{x_i x_j} |..x_j..x_i..>.
Operator fermionic_swap(int wire_i, int wire_j, int n);

/// C_phi = G(P_phi, 1).
Operator controlled_phase(double phi);

}  // namespace mgh
