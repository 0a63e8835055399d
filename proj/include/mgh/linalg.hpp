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

#include <complex>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

namespace mgh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Largest register the dense kernel will build. Only the protocol's joint
/// space gets close to this.
inline constexpr int kMaxQubits = 15;

/// Numerical thresholds shared by every module. Residuals are max-entry norms.
struct Tolerances {
    double unitary = 1e-9;
    double residual = 1e-9;
    double norm = 1e-12;

    /// Throws std::invalid_argument unless every threshold is strictly positive.
    void validate() const;
};

/// Dense 2^n x 2^n complex matrix. Qubit 1 is the most significant bit of the
/// row/column index, so |z_1,...,z_n> has index sum_k z_k 2^(n-k).
class Operator {
public:
    explicit Operator(Matrix m);

    static Operator identity(int n_qubits);
    static Operator zero(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    Complex operator()(Eigen::Index row, Eigen::Index col) const { return m_(row, col); }

    Operator adjoint() const;
    bool is_unitary(double tol) const;
    bool is_hermitian(double tol) const;

    Operator& operator+=(const Operator& other);
    Operator& operator-=(const Operator& other);
    Operator& operator*=(Complex s);

private:
    int n_qubits_;
    Matrix m_;
};

Operator operator*(const Operator& a, const Operator& b);
Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator*(Complex s, Operator a);
Operator operator*(Operator a, Complex s);

/// Dense length-2^n amplitude vector, same bit ordering as Operator.
class StateVector {
public:
    explicit StateVector(Vector amplitudes);

    /// Computational basis state |index>.
    static StateVector basis(int n_qubits, std::uint64_t index);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return v_.size(); }
    const Vector& amplitudes() const { return v_; }
    Complex operator[](Eigen::Index i) const { return v_(i); }

    double norm() const { return v_.norm(); }
    StateVector normalized() const;

private:
    int n_qubits_;
    Vector v_;
};

StateVector operator*(const Operator& op, const StateVector& psi);
StateVector kron(const StateVector& a, const StateVector& b);

/// Standard Kronecker product; throws std::length_error past kMaxQubits.
Operator kron(const Operator& a, const Operator& b);

/// 1^(k-1) (x) g (x) 1^(n-k-1) for a two-qubit g acting on wires [k, k+1].
Operator embed_two_qubit(const Operator& g, int k, int n);

/// 1^(k-1) (x) g (x) 1^(n-k) for a single-qubit g on wire k.
Operator embed_single_qubit(const Operator& g, int k, int n);

/// Z^(x)n as a diagonal operator.
Operator parity_operator(int n_qubits);

/// Max-entry norm used for every residual in the library.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

struct PhaseMatch {
    bool equal = false;
    std::optional<Complex> phase;  // absent when <b,a> vanishes
    double residual = 0.0;
};

/// Compares a against e^{i theta} b with theta taken from the normalised
/// inner product <b,a>. Throws std::invalid_argument on a dimension mismatch
/// or when b is numerically zero.
PhaseMatch equal_up_to_phase(const Operator& a, const Operator& b, const Tolerances& tol = {});
PhaseMatch equal_up_to_phase(const StateVector& a, const StateVector& b, const Tolerances& tol = {});

/// Divides out the phase of the largest-magnitude entry. Ties within tol.norm
/// of the maximum go to the lowest row-major index.
Operator canonical_phase(const Operator& a, const Tolerances& tol = {});
StateVector canonical_phase(const StateVector& a, const Tolerances& tol = {});

bool is_power_of_two_dim(Eigen::Index dim, int* n_qubits_out = nullptr);

}  // namespace mgh
