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

#include "mgh/svn.hpp"

#include <algorithm>
#include <string>

#include <fmt/format.h>

namespace mgh {

namespace {

std::vector<double> contract_residuals(const CarSet& d, const Operator& u) {
    const int n = d.n_modes;
    std::vector<double> out;
    const Matrix ud = u.matrix().adjoint();
    for (int mu = 1; mu <= 2 * n; ++mu) {
        const Matrix conj = ud * jw_majorana(n, mu).matrix() * u.matrix();
        out.push_back(max_abs(conj - d.ops[static_cast<std::size_t>(mu - 1)].matrix()));
    }
    return out;
}

}  // namespace

double SvnResult::max_residual() const {
    return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

CarViolation::CarViolation(int mu, int nu, double residual)
    : std::invalid_argument(fmt::format("anticommutation fails for (d_{}, d_{}): residual {:.3e}", mu, nu, residual)),
      mu_(mu),
      nu_(nu),
      residual_(residual) {}

ContractViolation::ContractViolation(int which, int mu, double residual)
    : std::invalid_argument(
          fmt::format("candidate {} misses U^dag c_{} U = d_{}: residual {:.3e}", which, mu, mu, residual)),
      which_(which),
      mu_(mu),
      residual_(residual) {}

SvnResult svn_reconstruct(const CarSet& d, const Tolerances& tol,
                          const std::optional<std::vector<std::uint64_t>>& probe_order) {
    const CarReport car = check_car(d, tol);
    if (!car.pass) {
        throw CarViolation(car.worst_mu, car.worst_nu,
                           std::max({car.max_residual, car.hermitian_residual, car.unitary_residual}));
    }
    const int n = d.n_modes;
    for (int mu = 1; mu <= 2 * n; ++mu) {
        if (parity_of(d.ops[static_cast<std::size_t>(mu - 1)], tol) != Parity::Odd) {
            throw std::invalid_argument(fmt::format("d_{} is not odd", mu));
        }
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix proj = Matrix::Identity(dim, dim);
    for (int k = 1; k <= n; ++k) {
        const Matrix& a = d.ops[static_cast<std::size_t>(2 * k - 2)].matrix();
        const Matrix& b = d.ops[static_cast<std::size_t>(2 * k - 1)].matrix();
        proj = proj * (0.5 * (Matrix::Identity(dim, dim) - kI * (a * b)));
    }

    std::vector<std::uint64_t> probes;
    if (probe_order) {
        probes = *probe_order;
    } else {
        for (Eigen::Index i = 0; i < dim; ++i) {
            probes.push_back(static_cast<std::uint64_t>(i));
        }
    }
    std::optional<Vector> vacuum;
    std::uint64_t used = 0;
    for (std::uint64_t p : probes) {
        if (p >= static_cast<std::uint64_t>(dim)) {
            throw std::out_of_range("probe index out of range");
        }
        const Vector img = proj.col(static_cast<Eigen::Index>(p));
        if (img.norm() > kProbeThreshold) {
            vacuum = img / img.norm();
            used = p;
            break;
        }
    }
    if (!vacuum) {
        Eigen::JacobiSVD<Matrix> svd(proj);
        svd.setThreshold(kProbeThreshold);
        throw std::runtime_error(
            fmt::format("projector annihilated every probe (projector rank {})", static_cast<long>(svd.rank())));
    }

    // W|z> = d_1^{z_1} d_3^{z_2} ... d_{2n-1}^{z_n} W|0>, W c_mu W^dag = d_mu.
    Matrix w(dim, dim);
    for (Eigen::Index z = 0; z < dim; ++z) {
        Vector col = *vacuum;
        for (int k = n; k >= 1; --k) {
            if ((static_cast<std::uint64_t>(z) >> (n - k)) & 1U) {
                col = d.ops[static_cast<std::size_t>(2 * k - 2)].matrix() * col;
            }
        }
        w.col(z) = col;
    }
    SvnResult res;
    res.u = canonical_phase(Operator(w.adjoint()), tol);
    res.phase_fixed = true;
    res.probe = used;
    res.residuals = contract_residuals(d, res.u);
    return res;
}

bool verify_uniqueness(const CarSet& d, const Operator& u1, const Operator& u2, const Tolerances& tol) {
    const Operator* cands[2] = {&u1, &u2};
    for (int which = 0; which < 2; ++which) {
        const std::vector<double> r = contract_residuals(d, *cands[which]);
        for (std::size_t mu = 0; mu < r.size(); ++mu) {
            if (r[mu] >= tol.residual) {
                throw ContractViolation(which + 1, static_cast<int>(mu) + 1, r[mu]);
            }
        }
    }
    return equal_up_to_phase(u1, u2, tol).equal;
}

CarSet conjugated_tuple(const Operator& v) {
    CarSet s;
    s.n_modes = v.n_qubits();
    const Matrix vd = v.matrix().adjoint();
    for (int mu = 1; mu <= 2 * s.n_modes; ++mu) {
        s.ops.emplace_back(vd * jw_majorana(s.n_modes, mu).matrix() * v.matrix());
    }
    return s;
}

}  // namespace mgh
