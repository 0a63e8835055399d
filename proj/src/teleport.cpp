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

#include "mgh/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mgh/circuits.hpp"
#include "mgh/random.hpp"

namespace mgh {

MagicState magic_state(const Operator& u, const std::string& label, const Tolerances& tol) {
    if (!u.is_unitary(tol.unitary)) {
        throw std::invalid_argument("magic_state: gate is not unitary");
    }
    const Parity p = parity_of(u, tol);
    if (p == Parity::None) {
        throw std::invalid_argument("magic_state: gate is not fermionic");
    }
    const int n = u.n_qubits();
    const Operator b = circuit_to_operator(build_Bn(n));
    MagicState m;
    m.n = n;
    m.gate_label = label;
    m.parity = p;
    m.psi = kron(Operator::identity(n), u) * (b * StateVector::basis(2 * n, 0));
    m.is_gaussian = is_gaussian_state_lambda(m.psi, tol);
    return m;
}

int outcome_bit(Outcome z, int index, int n) {
    if (index < 1 || index > 2 * n) {
        throw std::out_of_range("outcome bit index out of range");
    }
    return static_cast<int>((z >> (2 * n - index)) & 1U);
}

Operator correction_K(Outcome z, int n) {
    if (n < 1 || 2 * n > 62 || (z >> (2 * n)) != 0) {
        throw std::invalid_argument("correction_K: outcome does not fit 2n bits");
    }
    int quarter_turns = 0;
    int sign_exp = 0;
    MonomialMask mask = 0;
    for (int j = 1; j <= n; ++j) {
        const int lo = outcome_bit(z, 2 * j - 1, n);
        const int hi = outcome_bit(z, 2 * j, n);
        quarter_turns += lo;
        int tail = 0;
        for (int i = 2 * j + 1; i <= 2 * n; ++i) {
            tail += outcome_bit(z, i, n);
        }
        sign_exp += (lo + hi) * tail;
        // c_{2j-1}^{z_{2j}} c_{2j}^{z_{2j-1}} is already in ascending order.
        if (hi) {
            mask |= MonomialMask{1} << (2 * j - 2);
        }
        if (lo) {
            mask |= MonomialMask{1} << (2 * j - 1);
        }
    }
    static const Complex kMinusIPowers[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    Complex phase = kMinusIPowers[quarter_turns % 4];
    if (sign_exp % 2 != 0) {
        phase = -phase;
    }
    return phase * majorana_monomial(n, mask);
}

Operator correction_R(Outcome z, const Operator& u) {
    return u * correction_K(z, u.n_qubits()).adjoint() * u.adjoint();
}

double TeleportTranscript::max_residual() const {
    double worst = 0.0;
    for (const Branch& b : branches) {
        worst = std::max(worst, b.residual_vs_target);
    }
    return worst;
}

double TeleportTranscript::max_probability_deviation() const {
    const double expected = std::ldexp(1.0, -2 * n);
    double worst = 0.0;
    for (const Branch& b : branches) {
        worst = std::max(worst, std::abs(b.probability - expected));
    }
    return worst;
}

TeleportTranscript simulate_protocol(const Operator& u, const StateVector& psi_in, const Tolerances& tol) {
    const int n = u.n_qubits();
    if (psi_in.n_qubits() != n) {
        throw std::invalid_argument("simulate_protocol: input state has " + std::to_string(psi_in.n_qubits()) +
                                    " qubits, gate has " + std::to_string(n));
    }
    if (std::abs(psi_in.norm() - 1.0) >= tol.norm) {
        throw std::invalid_argument("simulate_protocol: input state is not normalized");
    }
    const MagicState magic = magic_state(u, "", tol);
    const StateVector joint = kron(psi_in, magic.psi);
    const Eigen::Index measured = Eigen::Index{1} << (2 * n);
    const Eigen::Index kept = Eigen::Index{1} << n;
    // Rows index wires 1..2n, columns the last n wires.
    const Matrix grid = joint.amplitudes().reshaped<Eigen::RowMajor>(measured, kept);
    const Matrix b_dag = circuit_to_operator(build_Bn(n)).matrix().adjoint();
    const Matrix after = b_dag * grid;
    const StateVector target = u * psi_in;

    TeleportTranscript t;
    t.n = n;
    t.input = psi_in;
    t.gate = u;
    t.branches.reserve(static_cast<std::size_t>(measured));
    for (Eigen::Index z = 0; z < measured; ++z) {
        const Vector row = after.row(z).transpose();
        const double amp = row.norm();
        if (amp < tol.norm) {
            throw std::runtime_error("simulate_protocol: branch " + std::to_string(z) + " vanished");
        }
        Branch br;
        br.z = static_cast<Outcome>(z);
        br.probability = amp * amp;
        br.raw_state = StateVector(row / amp);
        br.correction = correction_R(br.z, u);
        br.corrected = br.correction * br.raw_state;
        br.residual_vs_target = max_abs(br.corrected.amplitudes() - target.amplitudes());
        const PhaseMatch pm = equal_up_to_phase(br.corrected, target, tol);
        br.phase = pm.phase.value_or(Complex{0.0, 0.0});
        t.branches.push_back(std::move(br));
    }
    return t;
}

ProtocolSummary verify_protocol(const Operator& u, int trials, std::uint64_t seed, int correction_k_max,
                                const Tolerances& tol) {
    if (trials < 1) {
        throw std::invalid_argument("verify_protocol: trials must be positive");
    }
    ProtocolSummary s;
    s.n = u.n_qubits();
    s.trials = trials;
    s.correction_k_max = correction_k_max;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const TeleportTranscript tr = simulate_protocol(u, random_state(s.n, rng), tol);
        s.branches_per_trial = tr.branches.size();
        s.max_residual = std::max(s.max_residual, tr.max_residual());
        s.max_probability_deviation = std::max(s.max_probability_deviation, tr.max_probability_deviation());
    }
    std::vector<Operator> distinct;
    const Outcome outcomes = Outcome{1} << (2 * s.n);
    for (Outcome z = 0; z < outcomes; ++z) {
        const Operator r = correction_R(z, u);
        const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                      [&](const Operator& d) { return equal_up_to_phase(r, d, tol).equal; });
        if (seen) {
            continue;
        }
        distinct.push_back(r);
        const auto level = min_level(r, correction_k_max, tol);
        if (level) {
            ++s.correction_levels[*level];
        } else {
            ++s.corrections_unresolved;
        }
    }
    s.distinct_corrections = distinct.size();
    s.pass = s.max_residual < tol.residual && s.max_probability_deviation < tol.norm;
    return s;
}

}  // namespace mgh
