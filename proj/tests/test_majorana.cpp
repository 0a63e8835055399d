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

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <set>

#include "mgh/circuits.hpp"
#include "mgh/majorana.hpp"
#include "mgh/random.hpp"
#include "oracle.hpp"

namespace mgh {
namespace {

constexpr Complex kMinusI{0.0, -1.0};

// Dense ordered product of oracle Majoranas for a mask.
Matrix dense_monomial(int n, MonomialMask mask) {
    Matrix out = Matrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (int mu = 1; mu <= 2 * n; ++mu) {
        if (mask & (MonomialMask{1} << (mu - 1))) {
            out = out * oracle::majorana(n, mu);
        }
    }
    return out;
}

TEST(JordanWigner, MatchesPauliStrings) {
    for (int n = 1; n <= 4; ++n) {
        for (int mu = 1; mu <= 2 * n; ++mu) {
            EXPECT_EQ(max_abs(jw_majorana(n, mu).matrix() - oracle::majorana(n, mu)), 0.0) << n << " " << mu;
        }
    }
    EXPECT_EQ(max_abs(jw_majorana(2, 1).matrix() - oracle::pauli_string({'X', 'I'})), 0.0);
    EXPECT_EQ(max_abs(jw_majorana(2, 4).matrix() - oracle::pauli_string({'Z', 'Y'})), 0.0);
}

TEST(JordanWigner, OddBlockForms) {
    const Operator i1 = Operator::identity(1);
    const Operator x(oracle::pauli('X'));
    const Operator y(oracle::pauli('Y'));
    const Operator z(oracle::pauli('Z'));
    EXPECT_EQ(max_abs((build_J(x, x) - jw_majorana(2, 1)).matrix()), 0.0);
    EXPECT_EQ(max_abs((build_J(y, y) - jw_majorana(2, 2)).matrix()), 0.0);
    EXPECT_EQ(max_abs((build_J(z, z) - jw_majorana(2, 3)).matrix()), 0.0);
    EXPECT_EQ(max_abs((build_J(kMinusI * i1, Complex{0.0, 1.0} * i1) - jw_majorana(2, 4)).matrix()), 0.0);
}

TEST(JordanWigner, IndexOutOfRange) {
    EXPECT_THROW(jw_majorana(2, 0), std::out_of_range);
    EXPECT_THROW(jw_majorana(2, 5), std::out_of_range);
}

TEST(Monomial, EmptyMaskIsIdentity) {
    EXPECT_EQ(max_abs((majorana_monomial(3, 0) - Operator::identity(3)).matrix()), 0.0);
}

TEST(Monomial, XYIsIZ) {
    const Matrix want = Complex{0.0, 1.0} * oracle::pauli('Z');
    EXPECT_LT(max_abs(majorana_monomial(1, mask_from_indices({1, 2})).matrix() - want), 1e-15);
}

TEST(Monomial, CubicMatchesSwapConjugation) {
    const Operator swap = named_gate("SWAP");
    const Matrix want = Complex{0.0, 1.0} * (swap * jw_majorana(2, 1) * swap).matrix();
    EXPECT_LT(max_abs(majorana_monomial(2, mask_from_indices({1, 2, 3})).matrix() - want), 1e-15);
}

TEST(Monomial, MatchesDenseProducts) {
    for (MonomialMask m = 0; m < 64; ++m) {
        EXPECT_LT(max_abs(majorana_monomial(3, m).matrix() - dense_monomial(3, m)), 1e-15) << m;
    }
}

TEST(Monomial, MaskHelpers) {
    EXPECT_EQ(mask_from_indices({1, 3, 4}), MonomialMask{0b1101});
    EXPECT_EQ(indices_from_mask(0b1101), (std::vector<int>{1, 3, 4}));
    EXPECT_THROW(mask_from_indices({2, 2}), std::invalid_argument);
}

TEST(Monomial, ProductSignLaw) {
    for (MonomialMask a = 0; a < 16; ++a) {
        for (MonomialMask b = 0; b < 16; ++b) {
            const Matrix lhs = dense_monomial(2, a) * dense_monomial(2, b);
            const Matrix rhs = static_cast<double>(monomial_product_sign(a, b)) * dense_monomial(2, a ^ b);
            EXPECT_LT(max_abs(lhs - rhs), 1e-15) << a << " " << b;
        }
    }
}

TEST(Monomial, SingleMajoranaConjugationSign) {
    for (int n = 2; n <= 3; ++n) {
        for (int lambda = 1; lambda <= 2 * n; ++lambda) {
            const Matrix c = oracle::majorana(n, lambda);
            for (MonomialMask m = 0; m < (MonomialMask{1} << (2 * n)); ++m) {
                const int in_m = (m >> (lambda - 1)) & 1U;
                const double sign = ((std::popcount(m) - in_m) % 2 == 0) ? 1.0 : -1.0;
                EXPECT_LT(max_abs(c * dense_monomial(n, m) * c - sign * dense_monomial(n, m)), 1e-15);
            }
        }
    }
}

TEST(Expand, IdentityAndBasisElement) {
    const MajoranaPoly id = expand(Operator::identity(2));
    ASSERT_EQ(id.terms.size(), 1U);
    EXPECT_LT(std::abs(id.terms.at(0) - 1.0), 1e-15);
    const MajoranaPoly c3 = expand(jw_majorana(2, 3));
    ASSERT_EQ(c3.terms.size(), 1U);
    EXPECT_LT(std::abs(c3.terms.at(0b0100) - 1.0), 1e-15);
}

TEST(Expand, SwapAgainstDenseTraces) {
    const Operator swap = named_gate("SWAP");
    const MajoranaPoly p = expand(swap);
    std::set<MonomialMask> support;
    for (const auto& [mask, coeff] : p.terms) {
        support.insert(mask);
    }
    EXPECT_EQ(support, (std::set<MonomialMask>{0b0000, 0b0110, 0b1001, 0b1111}));
    for (MonomialMask m = 0; m < 16; ++m) {
        const Complex want = (dense_monomial(2, m).adjoint() * swap.matrix()).trace() / 4.0;
        const Complex got = p.terms.count(m) ? p.terms.at(m) : Complex{0.0, 0.0};
        EXPECT_LT(std::abs(got - want), 1e-15) << m;
    }
    // SWAP = (II + XX + YY + ZZ) / 2 with XX = -i c2 c3, YY = i c1 c4, ZZ = -c1 c2 c3 c4.
    EXPECT_LT(std::abs(p.terms.at(0b0000) - 0.5), 1e-15);
    EXPECT_LT(std::abs(p.terms.at(0b0110) - Complex(0.0, -0.5)), 1e-15);
    EXPECT_LT(std::abs(p.terms.at(0b1001) - Complex(0.0, 0.5)), 1e-15);
    EXPECT_LT(std::abs(p.terms.at(0b1111) + 0.5), 1e-15);
}

TEST(Expand, RoundTripOnRandomMatrices) {
    Rng rng(4);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + t % 3;
        const Eigen::Index dim = Eigen::Index{1} << n;
        Matrix m(dim, dim);
        for (Eigen::Index i = 0; i < m.size(); ++i) {
            m.data()[i] = Complex{g(rng), g(rng)};
        }
        const Operator u = (t % 2 == 0) ? Operator(haar_unitary(dim, rng)) : Operator(m);
        EXPECT_LT(max_abs((poly_to_operator(expand(u)) - u).matrix()), 1e-9);
    }
}

TEST(Expand, PrunesTinyCoefficients) {
    const Operator u = jw_majorana(2, 1) + Complex{1e-14, 0.0} * jw_majorana(2, 2);
    EXPECT_EQ(expand(u).terms.size(), 1U);
}

TEST(PolyToOperator, UniformFirstLevelIsUnitary) {
    for (int n = 1; n <= 3; ++n) {
        MajoranaPoly p;
        p.n_modes = n;
        for (int mu = 1; mu <= 2 * n; ++mu) {
            p.terms[MonomialMask{1} << (mu - 1)] = 1.0 / std::sqrt(2.0 * n);
        }
        EXPECT_TRUE(poly_to_operator(p).is_unitary(1e-12));
    }
    MajoranaPoly one;
    one.n_modes = 2;
    one.terms[0] = 1.0;
    EXPECT_EQ(max_abs((poly_to_operator(one) - Operator::identity(2)).matrix()), 0.0);
}

TEST(Parity, Decomposition) {
    const Operator z1(oracle::pauli_string({'Z', 'I'}));
    const Operator x1(oracle::pauli_string({'X', 'I'}));
    ParityParts p = parity_decompose(z1);
    EXPECT_EQ(max_abs((p.even - z1).matrix()), 0.0);
    EXPECT_EQ(max_abs(p.odd.matrix()), 0.0);
    p = parity_decompose(jw_majorana(3, 4));
    EXPECT_EQ(max_abs(p.even.matrix()), 0.0);
    p = parity_decompose(x1 + z1);
    EXPECT_EQ(max_abs((p.even - z1).matrix()), 0.0);
    EXPECT_EQ(max_abs((p.odd - x1).matrix()), 0.0);
}

TEST(Parity, PartsCommuteAndAnticommute) {
    Rng rng(9);
    const Operator m(haar_unitary(8, rng));
    const ParityParts p = parity_decompose(m);
    const Operator z = parity_operator(3);
    EXPECT_LT(max_abs((p.even + p.odd - m).matrix()), 1e-15);
    EXPECT_LT(max_abs((z * p.even - p.even * z).matrix()), 1e-12);
    EXPECT_LT(max_abs((z * p.odd + p.odd * z).matrix()), 1e-12);
}

TEST(Parity, Classification) {
    EXPECT_EQ(parity_of(named_gate("SWAP")), Parity::Even);
    EXPECT_EQ(parity_of(jw_majorana(2, 2)), Parity::Odd);
    EXPECT_EQ(parity_of(Operator(oracle::pauli_string({'X', 'I'})) + Operator::identity(2)), Parity::None);
    const StateVector mixed((StateVector::basis(2, 0).amplitudes() + StateVector::basis(2, 1).amplitudes()) /
                            std::sqrt(2.0));
    EXPECT_EQ(state_parity(mixed), Parity::None);
    EXPECT_EQ(state_parity(StateVector::basis(2, 3)), Parity::Even);
    EXPECT_EQ(state_parity(StateVector::basis(2, 2)), Parity::Odd);
}

TEST(Car, JordanWignerSetsPass) {
    Tolerances strict;
    strict.residual = 1e-12;
    strict.unitary = 1e-12;
    for (int n = 1; n <= 5; ++n) {
        const CarSet s = jw_set(n);
        const CarReport r = check_car(s, strict);
        EXPECT_TRUE(r.pass) << n;
        for (const Operator& c : s.ops) {
            EXPECT_EQ(parity_of(c), Parity::Odd);
        }
    }
}

TEST(Car, DuplicateFailsOnThatPair) {
    CarSet s = jw_set(2);
    s.ops[2] = s.ops[0];
    const CarReport r = check_car(s);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.worst_mu, 1);
    EXPECT_EQ(r.worst_nu, 3);
    EXPECT_NEAR(r.max_residual, 2.0, 1e-12);
}

TEST(Car, WrongCountThrows) {
    CarSet s = jw_set(2);
    s.ops.pop_back();
    EXPECT_THROW(check_car(s), std::invalid_argument);
}

TEST(Car, ConjugationPreservesRelations) {
    Rng rng(12);
    for (int t = 0; t < 10; ++t) {
        const Operator v(haar_unitary(8, rng));
        CarSet s = jw_set(3);
        for (Operator& c : s.ops) {
            c = v.adjoint() * c * v;
        }
        EXPECT_TRUE(check_car(s).pass);
    }
}

}  // namespace
}  // namespace mgh
