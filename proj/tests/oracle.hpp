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

// Independent reference constructions for the tests: Pauli products built with
// explicit index loops rather than the library's kernels.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mgh/linalg.hpp"

namespace oracle {

using mgh::Complex;
using mgh::Matrix;

inline Matrix pauli(char p) {
    Matrix m = Matrix::Zero(2, 2);
    switch (p) {
        case 'I':
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case 'X':
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 'Y':
            m(0, 1) = Complex{0.0, -1.0};
            m(1, 0) = Complex{0.0, 1.0};
            break;
        case 'Z':
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            break;
    }
    return m;
}

// (i1 i2, j1 j2) -> a(i1, j1) * b(i2, j2), written out with index arithmetic.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i1 = 0; i1 < a.rows(); ++i1) {
        for (Eigen::Index j1 = 0; j1 < a.cols(); ++j1) {
            for (Eigen::Index i2 = 0; i2 < b.rows(); ++i2) {
                for (Eigen::Index j2 = 0; j2 < b.cols(); ++j2) {
                    out(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
                }
            }
        }
    }
    return out;
}

inline Matrix pauli_string(const std::vector<char>& letters) {
    Matrix out = Matrix::Identity(1, 1);
    for (char c : letters) {
        out = kron(out, pauli(c));
    }
    return out;
}

// Z ... Z X I ... I or Z ... Z Y I ... I.
inline Matrix majorana(int n, int mu) {
    const int k = (mu + 1) / 2;
    std::vector<char> letters;
    for (int q = 1; q <= n; ++q) {
        letters.push_back(q < k ? 'Z' : (q == k ? (mu % 2 == 1 ? 'X' : 'Y') : 'I'));
    }
    return pauli_string(letters);
}

inline Matrix product(int n, std::initializer_list<int> mus) {
    Matrix out = Matrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (int mu : mus) {
        out = out * majorana(n, mu);
    }
    return out;
}

inline Matrix diag(std::initializer_list<Complex> entries) {
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(entries.size()), static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (Complex e : entries) {
        out(i, i) = e;
        ++i;
    }
    return out;
}

// Permutation-with-signs matrix from a basis rule |j> -> sign * |target(j)>.
template <typename Rule>
Matrix from_basis_rule(int n, Rule rule) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix out = Matrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const auto [target, amp] = rule(static_cast<std::uint64_t>(j));
        out(static_cast<Eigen::Index>(target), j) = amp;
    }
    return out;
}

inline int bit(std::uint64_t index, int qubit, int n) { return static_cast<int>((index >> (n - qubit)) & 1U); }

inline double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace oracle
