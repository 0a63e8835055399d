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

#include "mgh/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mgh/circuits.hpp"

namespace mgh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// A snap to a 2^m-th root counts only while the root spacing exceeds the tolerance by this factor.
constexpr double kSnapMargin = 1000.0;

// tr(c V) for a Majorana given by its sparse action.
Complex trace_with(const MonomialAction& c, const Matrix& v) {
    Complex acc{0.0, 0.0};
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        acc += c.phase[static_cast<std::size_t>(i)] * v(i, static_cast<Eigen::Index>(static_cast<std::uint64_t>(i) ^ c.flip));
    }
    return acc;
}

std::vector<MonomialAction> jw_actions(int n) {
    std::vector<MonomialAction> out;
    out.reserve(static_cast<std::size_t>(2 * n));
    for (int mu = 1; mu <= 2 * n; ++mu) {
        out.push_back(monomial_action(n, MonomialMask{1} << (mu - 1)));
    }
    return out;
}

// Shared by the public entry point and the recursion, which skips the
// unitarity precondition (conjugates of a unitary are unitary).
MembershipResult membership(const Operator& u, int k, const std::vector<Operator>& jw, const Tolerances& tol) {
    MembershipResult res;
    if (k == 1) {
        const auto coeffs = first_level_coeffs(u, tol);
        res.member = coeffs.has_value();
        return res;
    }
    const Matrix ud = u.matrix().adjoint();
    for (const Operator& c : jw) {
        const Operator v(u.matrix() * c.matrix() * ud);
        const ParityParts parts = parity_decompose(v);
        const double even_part = max_abs(parts.even.matrix());
        res.worst_residual = std::max(res.worst_residual, even_part);
        if (even_part >= tol.residual) {
            return res;
        }
        const MembershipResult inner = membership(v, k - 1, jw, tol);
        res.worst_residual = std::max(res.worst_residual, inner.worst_residual);
        if (!inner.member) {
            return res;
        }
    }
    res.member = true;
    return res;
}

double wrap_angle(double phi) {
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0) {
        phi += kTwoPi;
    }
    if (phi >= kTwoPi) {
        phi -= kTwoPi;
    }
    return phi;
}

Complex det2(const Operator& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace

std::vector<Operator> conjugate_majoranas(const Operator& u) {
    const int n = u.n_qubits();
    std::vector<Operator> out;
    out.reserve(static_cast<std::size_t>(2 * n));
    const Matrix ud = u.matrix().adjoint();
    for (int mu = 1; mu <= 2 * n; ++mu) {
        out.emplace_back(u.matrix() * jw_majorana(n, mu).matrix() * ud);
    }
    return out;
}

std::optional<FirstLevelCoeffs> first_level_coeffs(const Operator& u, const Tolerances& tol) {
    const int n = u.n_qubits();
    const auto actions = jw_actions(n);
    const double scale = 1.0 / static_cast<double>(u.dim());
    FirstLevelCoeffs out;
    out.a = RealVector::Zero(2 * n);
    Matrix rebuilt = Matrix::Zero(u.dim(), u.dim());
    for (int mu = 0; mu < 2 * n; ++mu) {
        const Complex coeff = trace_with(actions[static_cast<std::size_t>(mu)], u.matrix()) * scale;
        if (std::abs(coeff.imag()) >= tol.residual) {
            return std::nullopt;
        }
        out.a(mu) = coeff.real();
        const MonomialAction& act = actions[static_cast<std::size_t>(mu)];
        for (Eigen::Index j = 0; j < u.dim(); ++j) {
            rebuilt(static_cast<Eigen::Index>(static_cast<std::uint64_t>(j) ^ act.flip), j) +=
                coeff.real() * act.phase[static_cast<std::size_t>(j)];
        }
    }
    out.residual = max_abs(u.matrix() - rebuilt);
    if (out.residual >= tol.residual || std::abs(out.a.norm() - 1.0) >= tol.norm) {
        return std::nullopt;
    }
    return out;
}

std::optional<RealMatrix> extract_rotation(const Operator& u, const Tolerances& tol) {
    const int n = u.n_qubits();
    const auto actions = jw_actions(n);
    const double scale = 1.0 / static_cast<double>(u.dim());
    RealMatrix r(2 * n, 2 * n);
    const Matrix ud = u.matrix().adjoint();
    for (int mu = 0; mu < 2 * n; ++mu) {
        const Matrix v = u.matrix() * jw_majorana(n, mu + 1).matrix() * ud;
        Matrix rebuilt = Matrix::Zero(u.dim(), u.dim());
        for (int nu = 0; nu < 2 * n; ++nu) {
            const MonomialAction& act = actions[static_cast<std::size_t>(nu)];
            const double coeff = (trace_with(act, v) * scale).real();
            r(mu, nu) = coeff;
            for (Eigen::Index j = 0; j < u.dim(); ++j) {
                rebuilt(static_cast<Eigen::Index>(static_cast<std::uint64_t>(j) ^ act.flip), j) +=
                    coeff * act.phase[static_cast<std::size_t>(j)];
            }
        }
        if (max_abs(v - rebuilt) >= tol.residual) {
            return std::nullopt;
        }
    }
    const double ortho = (r * r.transpose() - RealMatrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
    if (ortho >= tol.residual) {
        return std::nullopt;
    }
    return r;
}

LambdaOperator lambda_operator(int n) {
    if (n < 1 || n > 5) {
        throw std::invalid_argument("lambda_operator: dense form limited to n <= 5");
    }
    Operator acc = Operator::zero(2 * n);
    for (int k = 1; k <= 2 * n; ++k) {
        const Operator c = jw_majorana(n, k);
        acc += kron(c, c);
    }
    return {n, acc};
}

StateVector apply_lambda(int n, const StateVector& psi) {
    if (psi.n_qubits() != 2 * n) {
        throw std::invalid_argument("apply_lambda: state must live on 2n qubits");
    }
    const Eigen::Index d = Eigen::Index{1} << n;
    // Row-major reshape: (A (x) B) vec(Psi) = vec(A Psi B^T).
    const Matrix psi_m = psi.amplitudes().reshaped<Eigen::RowMajor>(d, d);
    Matrix out = Matrix::Zero(d, d);
    for (int k = 1; k <= 2 * n; ++k) {
        const Matrix c = jw_majorana(n, k).matrix();
        out += c * psi_m * c.transpose();
    }
    return StateVector(out.reshaped<Eigen::RowMajor>());
}

double lambda_commutator_residual(const Operator& u) {
    const int n = u.n_qubits();
    const Eigen::Index d = u.dim();
    // Lambda (U(x)U) - (U(x)U) Lambda = sum_k (c_k U)(x)(c_k U) - (U c_k)(x)(U c_k).
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (int k = 1; k <= 2 * n; ++k) {
        const Matrix c = jw_majorana(n, k).matrix();
        left.push_back(c * u.matrix());
        right.push_back(u.matrix() * c);
    }
    double worst = 0.0;
    Matrix block(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            block.setZero();
            for (std::size_t k = 0; k < left.size(); ++k) {
                block += left[k](i, j) * left[k] - right[k](i, j) * right[k];
            }
            worst = std::max(worst, max_abs(block));
        }
    }
    return worst;
}

bool is_gaussian_lambda(const Operator& u, const Tolerances& tol) {
    if (parity_of(u, tol) == Parity::None) {
        throw std::invalid_argument("is_gaussian_lambda: criterion applies to fermionic operators only");
    }
    return lambda_commutator_residual(u) < tol.residual;
}

bool is_gaussian_state_lambda(const StateVector& psi, const Tolerances& tol) {
    // Lambda (psi (x) psi) = sum_k (c_k psi) (x) (c_k psi), kept as a d x d matrix.
    const int n = psi.n_qubits();
    const Eigen::Index d = psi.dim();
    Matrix acc = Matrix::Zero(d, d);
    for (int k = 1; k <= 2 * n; ++k) {
        const MonomialAction act = monomial_action(n, MonomialMask{1} << (k - 1));
        Vector v = Vector::Zero(d);
        for (Eigen::Index j = 0; j < d; ++j) {
            v(static_cast<Eigen::Index>(static_cast<std::uint64_t>(j) ^ act.flip)) +=
                act.phase[static_cast<std::size_t>(j)] * psi[j];
        }
        acc += v * v.transpose();
    }
    return max_abs(acc) < tol.residual;
}

MembershipResult level_membership_detail(const Operator& u, int k, const Tolerances& tol) {
    if (k < 1) {
        throw std::invalid_argument("level_membership: k must be >= 1");
    }
    const int n = u.n_qubits();
    if (k >= 2) {
        if (std::pow(2.0 * n, k - 1) > kMaxConjugations) {
            throw std::length_error("level_membership: (2n)^(k-1) = " + std::to_string(std::pow(2.0 * n, k - 1)) +
                                    " conjugations exceeds the cost guard");
        }
        if (!u.is_unitary(tol.unitary)) {
            throw std::invalid_argument("level_membership: input is not unitary");
        }
    }
    std::vector<Operator> jw;
    for (int mu = 1; mu <= 2 * n; ++mu) {
        jw.push_back(jw_majorana(n, mu));
    }
    return membership(u, k, jw, tol);
}

bool level_membership(const Operator& u, int k, const Tolerances& tol) {
    return level_membership_detail(u, k, tol).member;
}

std::optional<int> min_level(const Operator& u, int k_max, const Tolerances& tol) {
    if (k_max < 1) {
        throw std::invalid_argument("min_level: k_max must be >= 1");
    }
    for (int k = 1; k <= k_max; ++k) {
        if (k >= 2 && std::pow(2.0 * u.n_qubits(), k - 1) > kMaxConjugations) {
            return std::nullopt;
        }
        if (level_membership(u, k, tol)) {
            return k;
        }
    }
    return std::nullopt;
}

TwoQubitBlocks two_qubit_decompose(const Operator& u, const Tolerances& tol) {
    if (u.n_qubits() != 2) {
        throw std::invalid_argument("two_qubit_decompose: expected a two-qubit operator");
    }
    const Parity p = parity_of(u, tol);
    Matrix a(2, 2);
    Matrix b(2, 2);
    if (p == Parity::Even) {
        a << u(0, 0), u(0, 3), u(3, 0), u(3, 3);
        b << u(1, 1), u(1, 2), u(2, 1), u(2, 2);
    } else if (p == Parity::Odd) {
        a << u(0, 1), u(0, 2), u(3, 1), u(3, 2);
        b << u(1, 0), u(1, 3), u(2, 0), u(2, 3);
    } else {
        throw std::invalid_argument("two_qubit_decompose: operator has mixed parity");
    }
    TwoQubitBlocks out{p, Operator(std::move(a)), Operator(std::move(b)), 0.0};
    const Operator rebuilt = (p == Parity::Even) ? build_G(out.a, out.b, tol) : build_J(out.a, out.b, tol);
    out.residual = max_abs((u - rebuilt).matrix());
    return out;
}

TwoQubitLevel two_qubit_min_level(const Operator& u, const Tolerances& tol, double angle_tol) {
    const TwoQubitBlocks blocks = two_qubit_decompose(u, tol);
    const Complex da = det2(blocks.a);
    const Complex db = det2(blocks.b);
    TwoQubitLevel out;
    out.phi = wrap_angle(std::arg(da / db));
    if (blocks.parity == Parity::Odd && max_abs((blocks.b - blocks.a.adjoint()).matrix()) < tol.residual &&
        std::abs(da + 1.0) < tol.residual) {
        out.level = 1;
        return out;
    }
    // Past this depth the roots crowd so densely that almost any angle snaps to one.
    const int m_max = std::min(30, static_cast<int>(std::floor(std::log2(kTwoPi / (kSnapMargin * angle_tol)))));
    for (int m = 0; m <= m_max; ++m) {
        const double step = kTwoPi / std::ldexp(1.0, m);
        const double j = std::round(out.phi / step);
        if (std::abs(out.phi - j * step) < angle_tol) {
            out.level = m + 2;
            return out;
        }
    }
    return out;
}

EquivClass equiv_class(const Operator& u, const Tolerances& tol) {
    const TwoQubitBlocks blocks = two_qubit_decompose(u, tol);
    EquivClass out;
    out.phi = wrap_angle(std::arg(det2(blocks.a) / det2(blocks.b)));
    out.generalised_phi = std::min(out.phi, kTwoPi - out.phi);
    out.representative = controlled_phase(out.phi);
    return out;
}

HierarchyReport classify(const Operator& u, int k_max, const Tolerances& tol) {
    HierarchyReport rep;
    rep.n_qubits = u.n_qubits();
    rep.k_max = k_max;
    rep.parity = parity_of(u, tol);
    const bool unitary = u.is_unitary(tol.unitary);
    if (rep.parity != Parity::None && unitary) {
        rep.rotation = extract_rotation(u, tol);
        if (rep.rotation) {
            rep.rotation_det = rep.rotation->determinant() > 0.0 ? 1 : -1;
        }
        rep.is_gaussian = (rep.n_qubits <= 5) ? is_gaussian_lambda(u, tol) : rep.rotation.has_value();
    }
    if (unitary) {
        rep.min_level = min_level(u, k_max, tol);
        if (rep.min_level && *rep.min_level >= 2) {
            rep.worst_residual = level_membership_detail(u, *rep.min_level, tol).worst_residual;
        } else if (rep.min_level) {
            rep.worst_residual = first_level_coeffs(u, tol)->residual;
        }
    }
    if (rep.n_qubits == 2 && rep.parity != Parity::None && unitary) {
        const TwoQubitBlocks blocks = two_qubit_decompose(u, tol);
        const TwoQubitLevel lvl = two_qubit_min_level(u, tol);
        TwoQubitSummary s;
        s.det_a = det2(blocks.a);
        s.det_b = det2(blocks.b);
        s.phi = lvl.phi;
        s.level_closed_form = lvl.level;
        s.class_representative_phi = std::min(lvl.phi, kTwoPi - lvl.phi);
        rep.two_qubit = s;
    }
    return rep;
}

}  // namespace mgh
