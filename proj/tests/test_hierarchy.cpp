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
#include <random>
#include <numbers>

#include "mgh/circuits.hpp"
#include "mgh/hierarchy.hpp"
#include "mgh/majorana.hpp"
#include "mgh/random.hpp"
#include "oracle.hpp"

namespace mgh {
namespace {

constexpr double kPi = std::numbers::pi;

Operator first_level_gate(const RealVector& a) {
    const int n = static_cast<int>(a.size()) / 2;
    Operator out = Operator::identity(n) * Complex(0.0, 0.0);
    for (int mu = 1; mu <= 2 * n; ++mu) {
        out = out + jw_majorana(n, mu) * Complex(a(mu - 1), 0.0);
    }
    return out;
}

RealVector random_unit(int len, Rng& rng) {
    std::normal_distribution<double> gauss;
    RealVector a(len);
    for (int i = 0; i < len; ++i) {
        a(i) = gauss(rng);
    }
    return a / a.norm();
}

// Ratio det(A)/det(B) read straight off the matrix entries in either block layout.
Complex block_det_ratio(const Matrix& u) {
    const bool even = std::abs(u(0, 0)) + std::abs(u(0, 3)) + std::abs(u(3, 0)) + std::abs(u(3, 3)) > 1e-9;
    if (even) {
        const Complex da = u(0, 0) * u(3, 3) - u(0, 3) * u(3, 0);
        const Complex db = u(1, 1) * u(2, 2) - u(1, 2) * u(2, 1);
        return da / db;
    }
    const Complex da = u(1, 0) * u(2, 3) - u(1, 3) * u(2, 0);
    const Complex db = u(0, 1) * u(3, 2) - u(0, 2) * u(3, 1);
    return da / db;
}

// Smallest k >= 2 with ratio^(2^(k-2)) = 1, by repeated squaring.
int closed_form_level(Complex ratio) {
    for (int k = 2; k <= 12; ++k) {
        if (std::abs(ratio - 1.0) < 1e-9) {
            return k;
        }
        ratio *= ratio;
    }
    return -1;
}

TEST(FirstLevel, BasisMajorana) {
    const auto a = first_level_coeffs(jw_majorana(2, 3));
    ASSERT_TRUE(a.has_value());
    RealVector want = RealVector::Zero(4);
    want(2) = 1.0;
    EXPECT_LT((a->a - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(FirstLevel, NormalisedSum) {
    const Operator u = (jw_majorana(2, 1) + jw_majorana(2, 2)) * Complex(1.0 / std::sqrt(2.0), 0.0);
    const auto a = first_level_coeffs(u);
    ASSERT_TRUE(a.has_value());
    EXPECT_NEAR(a->a(0), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(a->a(1), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(a->a(2), 0.0, 1e-15);
    EXPECT_NEAR(a->a(3), 0.0, 1e-15);
}

TEST(FirstLevel, RejectsNonLinearOperators) {
    EXPECT_FALSE(first_level_coeffs(named_gate("SWAP")).has_value());
    EXPECT_FALSE(first_level_coeffs(Operator::identity(2)).has_value());
    EXPECT_FALSE(first_level_coeffs(jw_majorana(2, 1) * Complex(0.0, 1.0)).has_value());
}

TEST(FirstLevel, RandomUnitVectorsRoundTrip) {
    Rng rng(5);
    for (int n = 2; n <= 4; ++n) {
        for (int t = 0; t < 5; ++t) {
            const RealVector a = random_unit(2 * n, rng);
            const auto got = first_level_coeffs(first_level_gate(a));
            ASSERT_TRUE(got.has_value());
            EXPECT_LT((got->a - a).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(Rotation, Identity) {
    const auto r = extract_rotation(Operator::identity(3));
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ((*r - RealMatrix::Identity(6, 6)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Rotation, FirstMajoranaReflects) {
    const auto r = extract_rotation(jw_majorana(2, 1));
    ASSERT_TRUE(r.has_value());
    RealMatrix want = RealMatrix::Zero(4, 4);
    for (int mu = 1; mu <= 4; ++mu) {
        const Matrix c = oracle::majorana(2, mu);
        const Matrix conj = oracle::majorana(2, 1) * c * oracle::majorana(2, 1);
        want(mu - 1, mu - 1) = (conj - c).cwiseAbs().maxCoeff() < 1e-15 ? 1.0 : -1.0;
    }
    EXPECT_EQ((*r - want).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(want(0, 0), 1.0);
    EXPECT_EQ(want(3, 3), -1.0);
}

TEST(Rotation, SwapIsNotGaussian) { EXPECT_FALSE(extract_rotation(named_gate("SWAP")).has_value()); }

TEST(Rotation, RowsConjugateMajoranas) {
    Rng rng(8);
    const CircuitIR c = random_matchgate_circuit(3, 12, rng);
    const Operator u = circuit_to_operator(c);
    const auto r = extract_rotation(u);
    ASSERT_TRUE(r.has_value());
    for (int mu = 1; mu <= 6; ++mu) {
        Matrix sum = Matrix::Zero(8, 8);
        for (int nu = 1; nu <= 6; ++nu) {
            sum += (*r)(mu - 1, nu - 1) * oracle::majorana(3, nu);
        }
        EXPECT_LT(max_abs(u.matrix() * oracle::majorana(3, mu) * u.matrix().adjoint() - sum), 1e-12);
    }
}

TEST(Lambda, OperatorIsHermitianSumOfSquares) {
    for (int n = 1; n <= 3; ++n) {
        const LambdaOperator lam = lambda_operator(n);
        EXPECT_EQ(lam.n_modes, n);
        Matrix want = Matrix::Zero(Eigen::Index{1} << (2 * n), Eigen::Index{1} << (2 * n));
        for (int mu = 1; mu <= 2 * n; ++mu) {
            want += oracle::kron(oracle::majorana(n, mu), oracle::majorana(n, mu));
        }
        EXPECT_EQ(max_abs(lam.matrix.matrix() - want), 0.0);
        EXPECT_EQ(max_abs(lam.matrix.matrix() - lam.matrix.matrix().adjoint()), 0.0);
    }
    EXPECT_THROW(lambda_operator(6), std::invalid_argument);
}

TEST(Lambda, ApplyMatchesDense) {
    Rng rng(3);
    const StateVector psi = random_state(4, rng);
    const StateVector got = apply_lambda(2, psi);
    const Vector want = lambda_operator(2).matrix.matrix() * psi.amplitudes();
    EXPECT_LT(max_abs(got.amplitudes() - want), 1e-12);
    EXPECT_THROW(apply_lambda(2, random_state(3, rng)), std::invalid_argument);
}

TEST(Lambda, GaussianCriterion) {
    Rng rng(11);
    for (int t = 0; t < 5; ++t) {
        EXPECT_TRUE(is_gaussian_lambda(circuit_to_operator(random_matchgate_circuit(3, 10, rng))));
    }
    EXPECT_FALSE(is_gaussian_lambda(named_gate("SWAP")));
    EXPECT_FALSE(is_gaussian_lambda(named_gate("CZ")));
    EXPECT_TRUE(is_gaussian_lambda(jw_majorana(3, 4)));
    EXPECT_THROW(is_gaussian_lambda(Operator(oracle::pauli_string({'X', 'I'}) + oracle::pauli_string({'I', 'I'}))),
                 std::invalid_argument);
    const Matrix h = (oracle::pauli('X') + oracle::pauli('Z')) / std::sqrt(2.0);
    EXPECT_THROW(is_gaussian_lambda(Operator(oracle::kron(h, oracle::pauli('I')))), std::invalid_argument);
}

// Dense oracle for the state criterion: Lambda applied to psi (x) psi.
double dense_state_residual(const StateVector& psi) {
    const Vector v = psi.amplitudes();
    const Vector pair = oracle::kron(Matrix(v), Matrix(v));
    return (lambda_operator(psi.n_qubits()).matrix.matrix() * pair).cwiseAbs().maxCoeff();
}

TEST(Lambda, GaussianStates) {
    Rng rng(12);
    for (int t = 0; t < 3; ++t) {
        const Operator m = circuit_to_operator(random_matchgate_circuit(3, 10, rng));
        const StateVector psi = m * StateVector::basis(3, 0);
        EXPECT_TRUE(is_gaussian_state_lambda(psi));
        EXPECT_LT(dense_state_residual(psi), 1e-12);
    }
    // Even cat state on four modes: the dense residual is of order one.
    Vector cat = Vector::Zero(16);
    cat(0) = cat(15) = 1.0 / std::sqrt(2.0);
    const StateVector cat_state(cat);
    EXPECT_GT(dense_state_residual(cat_state), 0.1);
    EXPECT_FALSE(is_gaussian_state_lambda(cat_state));
    const StateVector random = random_fermionic_unitary(3, false, rng) * StateVector::basis(3, 0);
    EXPECT_EQ(is_gaussian_state_lambda(random), dense_state_residual(random) < 1e-9);
}

TEST(Lambda, AgreesWithRotationExtraction) {
    Rng rng(13);
    std::vector<Operator> corpus = {named_gate("SWAP"), named_gate("CZ"), named_gate("FSWAP"), named_gate("GHH"),
                                    jw_majorana(2, 2),  build_F(parse_pattern("1,0,*")), fermionic_swap(1, 3, 3)};
    for (int t = 0; t < 4; ++t) {
        corpus.push_back(random_matchgate(rng));
        corpus.push_back(random_fermionic_unitary(2, t % 2 == 1, rng));
        corpus.push_back(planted_two_qubit(t % 2 == 0 ? Parity::Even : Parity::Odd, kPi / 2, rng));
    }
    for (const Operator& u : corpus) {
        EXPECT_EQ(extract_rotation(u).has_value(), is_gaussian_lambda(u));
    }
}

TEST(Membership, SwapAtThirdLevel) {
    const Operator swap = named_gate("SWAP");
    EXPECT_TRUE(level_membership(swap, 3));
    EXPECT_FALSE(level_membership(swap, 2));
    EXPECT_FALSE(level_membership(swap, 1));
    EXPECT_EQ(min_level(swap), 3);
}

TEST(Membership, ControlledZAndPhases) {
    EXPECT_TRUE(level_membership(named_gate("CZ"), 3));
    EXPECT_EQ(min_level(named_gate("CZ")), 3);
    for (int k = 3; k <= 6; ++k) {
        const Operator c = named_gate("CPHASE", {2.0 * kPi / std::pow(2.0, k - 2)});
        EXPECT_TRUE(level_membership(c, k)) << k;
        EXPECT_FALSE(level_membership(c, k - 1)) << k;
        EXPECT_EQ(min_level(c), k);
    }
}

TEST(Membership, BasisMajoranasAreFirstLevel) {
    for (int mu = 1; mu <= 6; ++mu) {
        EXPECT_EQ(min_level(jw_majorana(3, mu)), 1);
    }
}

TEST(Membership, PatternGatesFollowPatternLength) {
    int checked = 0;
    for (int code = 0; code < 27; ++code) {
        Pattern y;
        int c = code;
        for (int i = 0; i < 3; ++i) {
            y.push_back(static_cast<Trit>(c % 3));
            c /= 3;
        }
        const int len = pattern_length(y);
        if (len == 0) {
            continue;
        }
        EXPECT_EQ(min_level(build_F(y)), len + 1) << pattern_to_string(y);
        ++checked;
    }
    EXPECT_EQ(checked, 26);
}

TEST(Membership, OuterFermionicSwap) { EXPECT_EQ(min_level(fermionic_swap(1, 3, 3)), 3); }

TEST(Membership, ScalarsAreSecondLevel) {
    EXPECT_EQ(min_level(Operator::identity(2) * std::polar(1.0, 0.4)), 2);
    EXPECT_EQ(min_level(Operator::identity(2) * Complex(-1.0, 0.0)), 2);
}

TEST(Membership, NothingFoundBelowCap) {
    EXPECT_FALSE(min_level(named_gate("CPHASE", {1.0}), 6).has_value());
    EXPECT_FALSE(min_level(named_gate("CZ"), 2).has_value());
}

TEST(Membership, CostGuard) {
    // Twelve Majoranas: 12^7 conjugations at k = 8 exceeds the cap, 12^6 at k = 7 does not.
    EXPECT_THROW(level_membership(Operator::identity(6), 8), std::length_error);
    const Operator generic = embed_two_qubit(named_gate("CPHASE", {1.0}), 1, 6);
    EXPECT_FALSE(min_level(generic, 8).has_value());
    EXPECT_EQ(min_level(embed_two_qubit(named_gate("CZ"), 3, 6), 8), 3);
}

TEST(Membership, RejectsBadInput) {
    Matrix m = Matrix::Identity(4, 4);
    m(0, 0) = 2.0;
    EXPECT_THROW(level_membership(Operator(m), 2), std::invalid_argument);
    EXPECT_THROW(level_membership(named_gate("SWAP"), 0), std::invalid_argument);
    EXPECT_FALSE(level_membership(Operator(m), 1));
}

TEST(Membership, GaussianFactorSideMatters) {
    // Conjugating by G * U only rotates the Majoranas that U produces; U * G mixes first.
    Rng rng(7);
    const Operator cz = embed_two_qubit(named_gate("CZ"), 1, 3);
    for (int t = 0; t < 3; ++t) {
        const Operator g = circuit_to_operator(random_matchgate_circuit(3, 10, rng));
        EXPECT_EQ(min_level(g * cz, 6), 3);
        EXPECT_FALSE(min_level(cz * g, 6).has_value());
    }
}

TEST(Closure, PhasesMajoranasAndNesting) {
    Rng rng(21);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    struct Source {
        Operator u;
        int level;
    };
    std::vector<Source> sources;
    for (int k = 2; k <= 4; ++k) {
        const double phi = 2.0 * kPi / std::pow(2.0, k - 2);
        sources.push_back({planted_two_qubit(Parity::Even, phi, rng), k});
        sources.push_back({planted_two_qubit(Parity::Odd, phi, rng), k});
    }
    sources.push_back({circuit_to_operator(random_matchgate_circuit(3, 10, rng)), 2});
    sources.push_back({circuit_to_operator(random_matchgate_circuit(3, 10, rng)) * build_F(parse_pattern("1,*,0")), 3});
    sources.push_back({jw_majorana(3, 2) * jw_majorana(3, 5) * build_F(parse_pattern("0,1,1")), 4});
    for (const Source& s : sources) {
        const int n = s.u.n_qubits();
        ASSERT_TRUE(level_membership(s.u, s.level));
        EXPECT_TRUE(level_membership(s.u * std::polar(1.0, angle(rng)), s.level));
        EXPECT_TRUE(level_membership(s.u, s.level + 1));
        for (int mu = 1; mu <= 2 * n; ++mu) {
            const Operator c = jw_majorana(n, mu);
            EXPECT_TRUE(level_membership(s.u * c, s.level));
            EXPECT_TRUE(level_membership(c * s.u, s.level));
            EXPECT_TRUE(level_membership(c * s.u * c, s.level));
        }
    }
}

TEST(Closure, TensorProducts) {
    Rng rng(22);
    const Operator m1 = random_matchgate(rng);
    const Operator m2 = random_matchgate(rng);
    EXPECT_TRUE(level_membership(kron(m1, m2), 2));
    EXPECT_TRUE(level_membership(kron(jw_majorana(2, 1), m2), 2));
    EXPECT_TRUE(level_membership(kron(named_gate("SWAP"), named_gate("CZ")), 3));
    EXPECT_TRUE(level_membership(kron(m1, named_gate("SWAP")), 3));
    EXPECT_FALSE(level_membership(kron(m1, named_gate("SWAP")), 2));
}

TEST(Closure, FirstLevelReflection) {
    Rng rng(23);
    for (int n = 2; n <= 3; ++n) {
        for (int t = 0; t < 5; ++t) {
            const RealVector a = random_unit(2 * n, rng);
            const RealVector b = random_unit(2 * n, rng);
            const Operator ga = first_level_gate(a);
            const auto got = first_level_coeffs(ga * first_level_gate(b) * ga.adjoint());
            ASSERT_TRUE(got.has_value());
            const RealVector want = (2.0 * a * a.transpose() - RealMatrix::Identity(2 * n, 2 * n)) * b;
            EXPECT_LT((got->a - want).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(Conjugates, IdentityGivesBasis) {
    const auto v = conjugate_majoranas(Operator::identity(2));
    ASSERT_EQ(v.size(), 4U);
    for (int mu = 1; mu <= 4; ++mu) {
        EXPECT_EQ(max_abs(v[mu - 1].matrix() - oracle::majorana(2, mu)), 0.0);
    }
}

TEST(Conjugates, SwapGivesCubicMonomials) {
    const auto v = conjugate_majoranas(named_gate("SWAP"));
    const Matrix swap = named_gate("SWAP").matrix();
    for (int mu = 1; mu <= 4; ++mu) {
        EXPECT_LT(max_abs(v[mu - 1].matrix() - swap * oracle::majorana(2, mu) * swap), 1e-15);
        const MajoranaPoly p = expand(v[mu - 1]);
        ASSERT_EQ(p.terms.size(), 1U);
        EXPECT_EQ(std::popcount(p.terms.begin()->first), 3);
    }
    EXPECT_LT(max_abs(v[0].matrix() - Complex(0.0, -1.0) * oracle::product(2, {1, 2, 3})), 1e-15);
}

TEST(Conjugates, FirstLevelGateCoefficients) {
    Rng rng(24);
    const RealVector a = random_unit(6, rng);
    const auto v = conjugate_majoranas(first_level_gate(a));
    for (int mu = 1; mu <= 6; ++mu) {
        const auto got = first_level_coeffs(v[mu - 1]);
        ASSERT_TRUE(got.has_value());
        for (int lam = 1; lam <= 6; ++lam) {
            const double want = lam == mu ? 2.0 * a(mu - 1) * a(mu - 1) - 1.0 : 2.0 * a(mu - 1) * a(lam - 1);
            EXPECT_NEAR(got->a(lam - 1), want, 1e-12);
        }
    }
}

TEST(TwoQubit, Decompositions) {
    const TwoQubitBlocks swap = two_qubit_decompose(named_gate("SWAP"));
    EXPECT_EQ(swap.parity, Parity::Even);
    EXPECT_EQ(max_abs(swap.a.matrix() - Matrix::Identity(2, 2)), 0.0);
    EXPECT_EQ(max_abs(swap.b.matrix() - oracle::pauli('X')), 0.0);

    const TwoQubitBlocks c4 = two_qubit_decompose(jw_majorana(2, 4));
    EXPECT_EQ(c4.parity, Parity::Odd);
    EXPECT_LT(max_abs(c4.a.matrix() - Complex(0.0, -1.0) * Matrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs(c4.b.matrix() - Complex(0.0, 1.0) * Matrix::Identity(2, 2)), 1e-15);

    const Operator p = named_gate("P", {kPi / 3});
    const TwoQubitBlocks g = two_qubit_decompose(build_G(p, Operator::identity(1), Tolerances{}));
    EXPECT_EQ(g.parity, Parity::Even);
    EXPECT_LT(max_abs(g.a.matrix() - p.matrix()), 1e-15);
    EXPECT_LT(max_abs(g.b.matrix() - Matrix::Identity(2, 2)), 1e-15);

    EXPECT_THROW(two_qubit_decompose(Operator(oracle::pauli_string({'X', 'I'}) * Complex(1.0, 0.0) +
                                              Matrix::Identity(4, 4))),
                 std::invalid_argument);
    EXPECT_THROW(two_qubit_decompose(Operator::identity(3)), std::invalid_argument);
}

TEST(TwoQubit, ClosedFormLevels) {
    EXPECT_EQ(two_qubit_min_level(named_gate("SWAP")).level, 3);
    EXPECT_NEAR(two_qubit_min_level(named_gate("SWAP")).phi, kPi, 1e-12);
    EXPECT_EQ(two_qubit_min_level(build_G(named_gate("P", {kPi / 2}), Operator::identity(1))).level, 4);
    EXPECT_EQ(two_qubit_min_level(named_gate("GHH")).level, 2);
    EXPECT_FALSE(two_qubit_min_level(named_gate("CPHASE", {1.0})).level.has_value());
    EXPECT_EQ(two_qubit_min_level(named_gate("CPHASE", {kPi / 65536.0})).level, 19);
}

TEST(TwoQubit, FirstLevelOddBlocks) {
    Rng rng(25);
    for (int t = 0; t < 5; ++t) {
        Matrix a = haar_unitary(2, rng);
        const Complex d = a.determinant();
        a *= std::sqrt(-1.0 / d);  // det becomes -1
        const Operator u = build_J(Operator(a), Operator(Matrix(a.adjoint())));
        EXPECT_EQ(two_qubit_min_level(u).level, 1);
        EXPECT_EQ(min_level(u), 1);
    }
}

TEST(TwoQubit, ClosedFormAgreesWithRecursion) {
    Rng rng(26);
    for (int k = 2; k <= 6; ++k) {
        for (Parity parity : {Parity::Even, Parity::Odd}) {
            for (int j = 0; j < 2; ++j) {
                const double phi = 2.0 * kPi * (2 * j + 1) / std::pow(2.0, k - 2);
                const Operator u = planted_two_qubit(parity, k == 2 ? 0.0 : phi, rng);
                const TwoQubitLevel closed = two_qubit_min_level(u);
                ASSERT_TRUE(closed.level.has_value());
                EXPECT_EQ(*closed.level, closed_form_level(block_det_ratio(u.matrix())));
                EXPECT_EQ(closed.level, min_level(u)) << "k=" << k;
            }
        }
    }
}

TEST(EquivClass, ControlledZ) {
    const EquivClass e = equiv_class(named_gate("CZ"));
    EXPECT_NEAR(e.phi, kPi, 1e-12);
    EXPECT_NEAR(e.generalised_phi, kPi, 1e-12);
    EXPECT_LT(max_abs((e.representative - controlled_phase(kPi)).matrix()), 1e-12);
}

TEST(EquivClass, ConjugatePhasesCollapse) {
    const Operator quarter = build_G(named_gate("P", {kPi / 2}), Operator::identity(1));
    const Operator three = build_G(named_gate("P", {3 * kPi / 2}), Operator::identity(1));
    const EquivClass a = equiv_class(quarter);
    const EquivClass b = equiv_class(three);
    EXPECT_NEAR(a.phi, kPi / 2, 1e-12);
    EXPECT_NEAR(b.phi, 3 * kPi / 2, 1e-12);
    EXPECT_NEAR(a.generalised_phi, kPi / 2, 1e-12);
    EXPECT_NEAR(b.generalised_phi, kPi / 2, 1e-12);
}

TEST(EquivClass, InvariantUnderMatchgates) {
    Rng rng(27);
    for (int t = 0; t < 10; ++t) {
        const Operator u = random_matchgate(rng) * named_gate("CZ") * random_matchgate(rng);
        EXPECT_NEAR(equiv_class(u).phi, kPi, 1e-9);
    }
}

TEST(Classify, SwapReport) {
    const HierarchyReport r = classify(named_gate("SWAP"));
    EXPECT_EQ(r.n_qubits, 2);
    EXPECT_EQ(r.parity, Parity::Even);
    EXPECT_FALSE(r.is_gaussian);
    EXPECT_FALSE(r.rotation.has_value());
    EXPECT_EQ(r.min_level, 3);
    ASSERT_TRUE(r.two_qubit.has_value());
    EXPECT_EQ(r.two_qubit->level_closed_form, 3);
    EXPECT_NEAR(r.two_qubit->phi, kPi, 1e-12);
}

TEST(Classify, GaussianReport) {
    Rng rng(28);
    const HierarchyReport r = classify(circuit_to_operator(random_matchgate_circuit(3, 8, rng)));
    EXPECT_TRUE(r.is_gaussian);
    EXPECT_EQ(r.rotation_det, 1);
    EXPECT_EQ(r.min_level, 2);
    EXPECT_FALSE(r.two_qubit.has_value());
    const HierarchyReport odd = classify(jw_majorana(2, 1));
    EXPECT_EQ(odd.parity, Parity::Odd);
    EXPECT_EQ(odd.rotation_det, -1);
    EXPECT_EQ(odd.min_level, 1);
}

TEST(Classify, MinLevelConsistentWithMembership) {
    Rng rng(29);
    for (int t = 0; t < 6; ++t) {
        const Operator u = planted_two_qubit(Parity::Even, 2.0 * kPi / std::pow(2.0, t % 4), rng);
        const HierarchyReport r = classify(u);
        ASSERT_TRUE(r.min_level.has_value());
        EXPECT_TRUE(level_membership(u, *r.min_level));
        if (*r.min_level >= 2) {
            EXPECT_FALSE(level_membership(u, *r.min_level - 1));
        }
    }
}

}  // namespace
}  // namespace mgh
