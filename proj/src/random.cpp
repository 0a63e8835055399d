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

#include "mgh/random.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mgh/hierarchy.hpp"

namespace mgh {

namespace {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            m(r, c) = Complex{re, im};
        }
    }
    return m;
}

double uniform_angle(Rng& rng) {
    std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
    return dist(rng);
}

}  // namespace

Matrix haar_unitary(Eigen::Index dim, Rng& rng) {
    const Matrix z = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        const double mag = std::abs(d);
        if (mag > 0.0) {
            q.col(i) *= d / mag;
        }
    }
    return q;
}

StateVector random_state(int n, Rng& rng) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Vector v = ginibre(dim, 1, rng).col(0);
    return StateVector(v / v.norm());
}

Operator random_matchgate(Rng& rng) { return planted_two_qubit(Parity::Even, 0.0, rng); }

Operator planted_two_qubit(Parity parity, double phi, Rng& rng) {
    const Operator a(haar_unitary(2, rng));
    Matrix b = haar_unitary(2, rng);
    const Complex det_a = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const Complex det_b = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    // Scaling a 2x2 block by s scales its determinant by s^2.
    const Complex target = det_a * std::exp(Complex{0.0, -phi});
    b *= std::sqrt(target / det_b);
    if (parity == Parity::Odd) {
        return build_J(a, Operator(std::move(b)));
    }
    if (parity == Parity::Even) {
        return build_G(a, Operator(std::move(b)));
    }
    throw std::invalid_argument("planted_two_qubit: parity must be even or odd");
}

Operator random_fermionic_unitary(int n, bool odd, Rng& rng) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const Eigen::Index half = dim / 2;
    std::vector<Eigen::Index> even_idx;
    std::vector<Eigen::Index> odd_idx;
    for (Eigen::Index i = 0; i < dim; ++i) {
        (std::popcount(static_cast<std::uint64_t>(i)) % 2 == 0 ? even_idx : odd_idx).push_back(i);
    }
    const Matrix ue = haar_unitary(half, rng);
    const Matrix uo = haar_unitary(half, rng);
    Matrix u = Matrix::Zero(dim, dim);
    for (Eigen::Index r = 0; r < half; ++r) {
        for (Eigen::Index c = 0; c < half; ++c) {
            u(even_idx[r], even_idx[c]) = ue(r, c);
            u(odd_idx[r], odd_idx[c]) = uo(r, c);
        }
    }
    Operator out(std::move(u));
    if (odd) {
        out = out * jw_majorana(n, 1);
    }
    return out;
}

CircuitIR random_matchgate_circuit(int n, int depth, Rng& rng) {
    if (n < 2) {
        throw std::invalid_argument("random_matchgate_circuit: need at least two qubits");
    }
    std::uniform_int_distribution<int> pick_kind(0, 5);
    std::uniform_int_distribution<int> pick_pos(1, n - 1);
    std::uniform_int_distribution<int> pick_wire(1, n);
    CircuitIR c;
    c.n_qubits = n;
    for (int i = 0; i < depth; ++i) {
        GateApp g;
        const int kind = pick_kind(rng);
        switch (kind) {
            case 0:
            case 1:
            case 2: {
                static const char* const kPairs[3][2] = {{"RX", "RX"}, {"RZ", "RY"}, {"RY", "RZ"}};
                g.kind = GateKind::G;
                g.name = "G";
                g.block_a = BlockSpec{kPairs[kind][0], {uniform_angle(rng)}, {1.0, 0.0}};
                g.block_b = BlockSpec{kPairs[kind][1], {uniform_angle(rng)}, {1.0, 0.0}};
                g.pos = pick_pos(rng);
                break;
            }
            case 3:
                g.name = "FSWAP";
                g.pos = pick_pos(rng);
                break;
            case 4:
                g.name = "GHH";
                g.pos = pick_pos(rng);
                break;
            default:
                g.name = "RZ";
                g.params = {uniform_angle(rng)};
                g.pos = pick_wire(rng);
                break;
        }
        c.gates.push_back(std::move(g));
    }
    return c;
}

}  // namespace mgh
