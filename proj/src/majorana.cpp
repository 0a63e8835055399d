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

#include "mgh/majorana.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace mgh {

namespace {

void check_modes(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("mode count " + std::to_string(n) + " out of range");
    }
}

// Bit position of qubit k (1-based) inside a basis index.
std::uint64_t qubit_bit(int n, int k) { return std::uint64_t{1} << (n - k); }

// Bits of qubits 1..k-1.
std::uint64_t prefix_bits(int n, int k) {
    const std::uint64_t below_k = qubit_bit(n, k) - 1;
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    return all & ~below_k & ~qubit_bit(n, k);
}

// Applies c_mu to the basis state |j>, accumulating into phase.
std::uint64_t apply_majorana(int n, int mu, std::uint64_t j, Complex& phase) {
    const int k = (mu + 1) / 2;
    const std::uint64_t bit = qubit_bit(n, k);
    if (std::popcount(j & prefix_bits(n, k)) % 2 != 0) {
        phase = -phase;
    }
    if (mu % 2 == 0) {
        // Y|0> = i|1>, Y|1> = -i|0>
        phase *= (j & bit) ? -kI : kI;
    }
    return j ^ bit;
}

}  // namespace

std::string_view to_string(Parity p) {
    switch (p) {
        case Parity::Even:
            return "even";
        case Parity::Odd:
            return "odd";
        case Parity::None:
            return "none";
    }
    return "none";
}

MonomialAction monomial_action(int n, MonomialMask mask) {
    check_modes(n);
    if (n < 32 && (mask >> (2 * n)) != 0) {
        throw std::invalid_argument("monomial mask has bits beyond 2n");
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    MonomialAction out;
    out.phase.assign(dim, Complex{1.0, 0.0});
    const std::vector<int> mus = indices_from_mask(mask);
    for (std::uint64_t j = 0; j < dim; ++j) {
        std::uint64_t state = j;
        Complex ph{1.0, 0.0};
        for (auto it = mus.rbegin(); it != mus.rend(); ++it) {
            state = apply_majorana(n, *it, state, ph);
        }
        out.phase[j] = ph;
        if (j == 0) {
            out.flip = state;
        }
    }
    return out;
}

Operator jw_majorana(int n, int mu) {
    check_modes(n);
    if (mu < 1 || mu > 2 * n) {
        throw std::out_of_range("Majorana index " + std::to_string(mu) + " out of range 1.." +
                                std::to_string(2 * n));
    }
    return majorana_monomial(n, MonomialMask{1} << (mu - 1));
}

Operator majorana_monomial(int n, MonomialMask mask) {
    const MonomialAction act = monomial_action(n, mask);
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix m = Matrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        m(static_cast<Eigen::Index>(static_cast<std::uint64_t>(j) ^ act.flip), j) = act.phase[j];
    }
    return Operator(std::move(m));
}

MonomialMask mask_from_indices(const std::vector<int>& mus) {
    MonomialMask m = 0;
    for (int mu : mus) {
        if (mu < 1 || mu > 64) {
            throw std::out_of_range("Majorana index " + std::to_string(mu) + " out of range");
        }
        const MonomialMask bit = MonomialMask{1} << (mu - 1);
        if (m & bit) {
            throw std::invalid_argument("repeated Majorana index " + std::to_string(mu) + " in monomial");
        }
        m |= bit;
    }
    return m;
}

std::vector<int> indices_from_mask(MonomialMask mask) {
    std::vector<int> out;
    for (int b = 0; mask != 0; ++b, mask >>= 1) {
        if (mask & 1U) {
            out.push_back(b + 1);
        }
    }
    return out;
}

int monomial_product_sign(MonomialMask a, MonomialMask b) {
    // #(mu > nu) over mu in a, nu in b.
    int swaps = 0;
    for (MonomialMask rest = b; rest != 0; rest &= rest - 1) {
        const int nu_bit = std::countr_zero(rest);
        const MonomialMask above = (nu_bit >= 63) ? 0 : (~MonomialMask{0} << (nu_bit + 1));
        swaps += std::popcount(a & above);
    }
    return (swaps % 2 == 0) ? 1 : -1;
}

MajoranaPoly expand(const Operator& u, const Tolerances& tol) {
    const int n = u.n_qubits();
    if (2 * n > 62) {
        throw std::length_error("expand: register too large");
    }
    MajoranaPoly p;
    p.n_modes = n;
    const MonomialMask count = MonomialMask{1} << (2 * n);
    const double scale = 1.0 / static_cast<double>(u.dim());
    const Matrix& m = u.matrix();
    for (MonomialMask mask = 0; mask < count; ++mask) {
        const MonomialAction act = monomial_action(n, mask);
        Complex acc{0.0, 0.0};
        for (Eigen::Index j = 0; j < u.dim(); ++j) {
            acc += std::conj(act.phase[j]) * m(static_cast<Eigen::Index>(static_cast<std::uint64_t>(j) ^ act.flip), j);
        }
        acc *= scale;
        if (std::abs(acc) >= tol.norm) {
            p.terms.emplace(mask, acc);
        }
    }
    return p;
}

Operator poly_to_operator(const MajoranaPoly& p) {
    check_modes(p.n_modes);
    const Eigen::Index dim = Eigen::Index{1} << p.n_modes;
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& [mask, coeff] : p.terms) {
        const MonomialAction act = monomial_action(p.n_modes, mask);
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(static_cast<Eigen::Index>(static_cast<std::uint64_t>(j) ^ act.flip), j) += coeff * act.phase[j];
        }
    }
    return Operator(std::move(m));
}

ParityParts parity_decompose(const Operator& m) {
    // Z^(x)n is diagonal, so P M P just flips the sign of entries whose row and
    // column indices differ in parity.
    Matrix even = Matrix::Zero(m.dim(), m.dim());
    Matrix odd = Matrix::Zero(m.dim(), m.dim());
    for (Eigen::Index c = 0; c < m.dim(); ++c) {
        for (Eigen::Index r = 0; r < m.dim(); ++r) {
            const bool same = std::popcount(static_cast<std::uint64_t>(r ^ c)) % 2 == 0;
            (same ? even : odd)(r, c) = m(r, c);
        }
    }
    return {Operator(std::move(even)), Operator(std::move(odd))};
}

Parity parity_of(const Operator& m, const Tolerances& tol) {
    const ParityParts parts = parity_decompose(m);
    const double even_size = max_abs(parts.even.matrix());
    const double odd_size = max_abs(parts.odd.matrix());
    if (odd_size < tol.residual) {
        return Parity::Even;
    }
    if (even_size < tol.residual) {
        return Parity::Odd;
    }
    return Parity::None;
}

Parity state_parity(const StateVector& psi, const Tolerances& tol) {
    double even_weight = 0.0;
    double odd_weight = 0.0;
    for (Eigen::Index i = 0; i < psi.dim(); ++i) {
        const double a = std::abs(psi[i]);
        if (std::popcount(static_cast<std::uint64_t>(i)) % 2 == 0) {
            even_weight = std::max(even_weight, a);
        } else {
            odd_weight = std::max(odd_weight, a);
        }
    }
    // Z psi = +psi iff the odd amplitudes vanish; residual of Z psi -/+ psi is 2x those.
    if (2.0 * odd_weight < tol.residual) {
        return Parity::Even;
    }
    if (2.0 * even_weight < tol.residual) {
        return Parity::Odd;
    }
    return Parity::None;
}

CarSet jw_set(int n) {
    CarSet s;
    s.n_modes = n;
    for (int mu = 1; mu <= 2 * n; ++mu) {
        s.ops.push_back(jw_majorana(n, mu));
    }
    return s;
}

CarReport check_car(const CarSet& s, const Tolerances& tol) {
    if (s.n_modes < 1 || static_cast<int>(s.ops.size()) != 2 * s.n_modes) {
        throw std::invalid_argument("check_car: expected " + std::to_string(2 * s.n_modes) + " operators, got " +
                                    std::to_string(s.ops.size()));
    }
    for (const Operator& op : s.ops) {
        if (op.n_qubits() != s.n_modes) {
            throw std::invalid_argument("check_car: operator on the wrong number of qubits");
        }
    }
    CarReport rep;
    const Eigen::Index dim = s.ops.front().dim();
    const Matrix id = Matrix::Identity(dim, dim);
    for (const Operator& op : s.ops) {
        rep.hermitian_residual = std::max(rep.hermitian_residual, max_abs(op.matrix() - op.matrix().adjoint()));
        rep.unitary_residual = std::max(rep.unitary_residual, max_abs(op.matrix().adjoint() * op.matrix() - id));
    }
    rep.worst_mu = 1;
    rep.worst_nu = 1;
    for (std::size_t a = 0; a < s.ops.size(); ++a) {
        for (std::size_t b = a; b < s.ops.size(); ++b) {
            Matrix anti = s.ops[a].matrix() * s.ops[b].matrix() + s.ops[b].matrix() * s.ops[a].matrix();
            if (a == b) {
                anti -= 2.0 * id;
            }
            const double r = max_abs(anti);
            if (r > rep.max_residual) {
                rep.max_residual = r;
                rep.worst_mu = static_cast<int>(a) + 1;
                rep.worst_nu = static_cast<int>(b) + 1;
            }
        }
    }
    rep.pass = rep.max_residual < tol.residual && rep.hermitian_residual < tol.unitary &&
               rep.unitary_residual < tol.unitary;
    return rep;
}

}  // namespace mgh
