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

// Reconstruction of the unitary that carries the Jordan-Wigner Majoranas onto a
// given tuple of odd operators obeying the anticommutation relations.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mgh/linalg.hpp"
#include "mgh/majorana.hpp"

namespace mgh {

/// Threshold on the projected probe norm.
inline constexpr double kProbeThreshold = 1e-6;

struct SvnResult {
    Operator u = Operator::identity(1);  // U^dag c_mu U = d_mu
    std::vector<double> residuals;       // per mu
    bool phase_fixed = false;
    std::uint64_t probe = 0;  // basis index that seeded the vacuum

    double max_residual() const;
};

/// The tuple violates the anticommutation relations; mu and nu are 1-based.
class CarViolation : public std::invalid_argument {
public:
    CarViolation(int mu, int nu, double residual);
    int mu() const { return mu_; }
    int nu() const { return nu_; }
    double residual() const { return residual_; }

private:
    int mu_;
    int nu_;
    double residual_;
};

/// Throws CarViolation, std::invalid_argument when some d_mu is not odd, or
/// std::runtime_error (with the projector rank) if no probe survives the projector.
/// probe_order defaults to basis indices in ascending order.
SvnResult svn_reconstruct(const CarSet& d, const Tolerances& tol = {},
                          const std::optional<std::vector<std::uint64_t>>& probe_order = std::nullopt);

/// Thrown by verify_uniqueness when a candidate misses U^dag c_mu U = d_mu.
class ContractViolation : public std::invalid_argument {
public:
    ContractViolation(int which, int mu, double residual);
    int which() const { return which_; }  // 1 or 2
    int mu() const { return mu_; }
    double residual() const { return residual_; }

private:
    int which_;
    int mu_;
    double residual_;
};

bool verify_uniqueness(const CarSet& d, const Operator& u1, const Operator& u2, const Tolerances& tol = {});

/// Tuple V^dag c_mu V, the orientation svn_reconstruct inverts.
CarSet conjugated_tuple(const Operator& v);

}  // namespace mgh
