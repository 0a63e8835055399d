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

#include "mgh/linalg.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mgh {

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

int checked_qubits(Eigen::Index dim, const char* what) {
    int n = 0;
    if (!is_power_of_two_dim(dim, &n) || n < 1) {
        throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(dim) +
                                    " is not 2^n with n >= 1");
    }
    if (n > kMaxQubits) {
        throw std::length_error(std::string(what) + ": more than " + std::to_string(kMaxQubits) + " qubits");
    }
    return n;
}

// Shared by the operator and state overloads; a and b are flattened views.
template <typename A, typename B>
PhaseMatch match_phase(const A& a, const B& b, const Tolerances& tol) {
    if (b.norm() < tol.norm) {
        throw std::invalid_argument("equal_up_to_phase: reference is numerically zero");
    }
    PhaseMatch out;
    const Complex overlap = (b.conjugate().cwiseProduct(a)).sum();
    Complex phase{1.0, 0.0};
    if (std::abs(overlap) >= tol.norm) {
        phase = overlap / std::abs(overlap);
        out.phase = phase;
    }
    out.residual = (a - phase * b).cwiseAbs().maxCoeff();
    out.equal = out.phase.has_value() && out.residual < tol.residual;
    return out;
}

template <typename A>
Complex leading_phase(const A& a, const Tolerances& tol) {
    const double peak = a.cwiseAbs().maxCoeff();
    if (peak < tol.norm) {
        throw std::invalid_argument("canonical_phase: input is numerically zero");
    }
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a(i)) >= peak - tol.norm) {
            return a(i) / std::abs(a(i));
        }
    }
    return {1.0, 0.0};
}

}  // namespace

void Tolerances::validate() const {
    if (!(unitary > 0.0) || !(residual > 0.0) || !(norm > 0.0)) {
        throw std::invalid_argument("tolerances must be strictly positive");
    }
}

bool is_power_of_two_dim(Eigen::Index dim, int* n_qubits_out) {
    if (dim < 1 || (dim & (dim - 1)) != 0) {
        return false;
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    if (n_qubits_out != nullptr) {
        *n_qubits_out = n;
    }
    return true;
}

Operator::Operator(Matrix m) : n_qubits_(0), m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw std::invalid_argument("Operator: matrix is not square");
    }
    n_qubits_ = checked_qubits(m_.rows(), "Operator");
}

Operator Operator::identity(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("Operator::identity: qubit count out of range");
    }
    const Eigen::Index d = Eigen::Index{1} << n_qubits;
    return Operator(Matrix::Identity(d, d));
}

Operator Operator::zero(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("Operator::zero: qubit count out of range");
    }
    const Eigen::Index d = Eigen::Index{1} << n_qubits;
    return Operator(Matrix::Zero(d, d));
}

Operator Operator::adjoint() const { return Operator(m_.adjoint()); }

bool Operator::is_unitary(double tol) const {
    return max_abs(m_.adjoint() * m_ - Matrix::Identity(dim(), dim())) < tol;
}

bool Operator::is_hermitian(double tol) const { return max_abs(m_ - m_.adjoint()) < tol; }

Operator& Operator::operator+=(const Operator& other) {
    require_same_dim(dim(), other.dim(), "operator+");
    m_ += other.m_;
    return *this;
}

Operator& Operator::operator-=(const Operator& other) {
    require_same_dim(dim(), other.dim(), "operator-");
    m_ -= other.m_;
    return *this;
}

Operator& Operator::operator*=(Complex s) {
    m_ *= s;
    return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "operator*");
    return Operator(a.matrix() * b.matrix());
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }
Operator operator*(Complex s, Operator a) { return a *= s; }
Operator operator*(Operator a, Complex s) { return a *= s; }

StateVector::StateVector(Vector amplitudes) : n_qubits_(0), v_(std::move(amplitudes)) {
    n_qubits_ = checked_qubits(v_.size(), "StateVector");
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector::basis: qubit count out of range");
    }
    const Eigen::Index d = Eigen::Index{1} << n_qubits;
    if (index >= static_cast<std::uint64_t>(d)) {
        throw std::out_of_range("StateVector::basis: index out of range");
    }
    Vector v = Vector::Zero(d);
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v));
}

StateVector StateVector::normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) {
        throw std::invalid_argument("StateVector::normalized: zero vector");
    }
    return StateVector(v_ / nrm);
}

StateVector operator*(const Operator& op, const StateVector& psi) {
    require_same_dim(op.dim(), psi.dim(), "Operator*StateVector");
    return StateVector(op.matrix() * psi.amplitudes());
}

StateVector kron(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() + b.n_qubits() > kMaxQubits) {
        throw std::length_error("kron: combined register exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    Vector out(a.dim() * b.dim());
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        out.segment(i * b.dim(), b.dim()) = a[i] * b.amplitudes();
    }
    return StateVector(std::move(out));
}

Operator kron(const Operator& a, const Operator& b) {
    if (a.n_qubits() + b.n_qubits() > kMaxQubits) {
        throw std::length_error("kron: combined register exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    const Eigen::Index da = a.dim();
    const Eigen::Index db = b.dim();
    Matrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
        }
    }
    return Operator(std::move(out));
}

Operator embed_two_qubit(const Operator& g, int k, int n) {
    if (g.n_qubits() != 2) {
        throw std::invalid_argument("embed_two_qubit: gate is not a two-qubit operator");
    }
    if (n < 2 || k < 1 || k > n - 1) {
        throw std::out_of_range("embed_two_qubit: wire " + std::to_string(k) + " out of range for " +
                                std::to_string(n) + " qubits");
    }
    Operator out = g;
    if (k > 1) {
        out = kron(Operator::identity(k - 1), out);
    }
    if (n - k - 1 > 0) {
        out = kron(out, Operator::identity(n - k - 1));
    }
    return out;
}

Operator embed_single_qubit(const Operator& g, int k, int n) {
    if (g.n_qubits() != 1) {
        throw std::invalid_argument("embed_single_qubit: gate is not a single-qubit operator");
    }
    if (k < 1 || k > n) {
        throw std::out_of_range("embed_single_qubit: wire " + std::to_string(k) + " out of range for " +
                                std::to_string(n) + " qubits");
    }
    Operator out = g;
    if (k > 1) {
        out = kron(Operator::identity(k - 1), out);
    }
    if (n - k > 0) {
        out = kron(out, Operator::identity(n - k));
    }
    return out;
}

Operator parity_operator(int n_qubits) {
    Operator z = Operator::zero(n_qubits);
    Matrix m = Matrix::Zero(z.dim(), z.dim());
    for (Eigen::Index i = 0; i < z.dim(); ++i) {
        m(i, i) = (std::popcount(static_cast<std::uint64_t>(i)) % 2 == 0) ? 1.0 : -1.0;
    }
    return Operator(std::move(m));
}


PhaseMatch equal_up_to_phase(const Operator& a, const Operator& b, const Tolerances& tol) {
    require_same_dim(a.dim(), b.dim(), "equal_up_to_phase");
    return match_phase(a.matrix().reshaped<Eigen::RowMajor>(), b.matrix().reshaped<Eigen::RowMajor>(), tol);
}

PhaseMatch equal_up_to_phase(const StateVector& a, const StateVector& b, const Tolerances& tol) {
    require_same_dim(a.dim(), b.dim(), "equal_up_to_phase");
    return match_phase(a.amplitudes(), b.amplitudes(), tol);
}

Operator canonical_phase(const Operator& a, const Tolerances& tol) {
    const Complex ph = leading_phase(a.matrix().reshaped<Eigen::RowMajor>(), tol);
    return Operator(a.matrix() / ph);
}

StateVector canonical_phase(const StateVector& a, const Tolerances& tol) {
    const Complex ph = leading_phase(a.amplitudes(), tol);
    return StateVector(a.amplitudes() / ph);
}

}  // namespace mgh
