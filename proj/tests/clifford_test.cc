// Copyright 2026 The stabent Authors
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

#include <cmath>

#include "stabent/clifford.h"
#include "stabent/closed_forms.h"
#include "stabent/pauli_kernel.h"
#include "stabent/rng.h"
#include "stabent/state.h"

using namespace stabent;

TEST(clifford, group_sizes) {
    EXPECT_EQ(enumerate_clifford(1).size(), 24u);
    EXPECT_EQ(clifford_group(2).size(), 11520u);
    EXPECT_THROW(enumerate_clifford(3), std::invalid_argument);
}

TEST(clifford, tableaux_are_symplectic_and_match_unitaries) {
    const auto &group = clifford_group(2);
    for (std::size_t i = 0; i < group.size(); i += 37) {
        const CliffordElement &c = group[i];
        ASSERT_TRUE(c.tableau.is_symplectic());
        EXPECT_LT(Unitary{c.unitary}.unitarity_residual(), 1e-12);
        for (std::uint64_t x = 0; x < 4; x++) {
            for (std::uint64_t z = 0; z < 4; z++) {
                PauliOp p = PauliOp::hermitian(PauliString(2, x, z));
                Eigen::MatrixXcd lhs = c.unitary * pauli_op_matrix(p, 2) * c.unitary.adjoint();
                Eigen::MatrixXcd rhs = pauli_op_matrix(c.tableau.conjugate(p), 2);
                EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
            }
        }
    }
}

TEST(clifford, orbit_of_zero_is_the_stabilizer_states) {
    auto one = clifford_orbit_states(1);
    EXPECT_EQ(one.size(), 6u);
    auto states = clifford_orbit_states(2);
    EXPECT_EQ(states.size(), 60u);
    for (const PureState &s : states) {
        EXPECT_LT(std::abs(m_lin(s)), 1e-12);
        EXPECT_LT(std::abs(clifford_orbit_antiflatness(s)), 1e-12);
    }
    for (const PureState &s : one) {
        EXPECT_LT(std::abs(m_lin(s)), 1e-12);
    }
}

TEST(clifford, m_lin_is_clifford_invariant) {
    RngStream rng(21, 0);
    const auto &group = clifford_group(2);
    for (int trial = 0; trial < 10; trial++) {
        PureState psi = haar_state(Shape{2, 2}, rng);
        double base = m_lin(psi);
        double worst = 0;
        for (const CliffordElement &c : group) {
            worst = std::max(worst, std::abs(m_lin(apply_unitary(c.unitary, psi)) - base));
        }
        EXPECT_LT(worst, 1e-10);
    }
}

TEST(clifford, antiflatness_average_identity) {
    EXPECT_EQ(clifford_antiflat_prefactor(2, 4), make_rational(1, 10));
    PureState g = tensor(golden_state(1), golden_state(1));
    EXPECT_NEAR(clifford_orbit_antiflatness(g), 1.0 / 18.0, 1e-10);
    EXPECT_NEAR(m_lin(g), 5.0 / 9.0, 1e-12);
    RngStream rng(22, 0);
    for (int trial = 0; trial < 10; trial++) {
        PureState psi = haar_state(Shape{2, 2}, rng);
        EXPECT_NEAR(clifford_orbit_antiflatness(psi), m_lin(psi) / 10.0, 1e-10);
    }
    EXPECT_THROW(clifford_orbit_antiflatness(haar_state(Shape{2, 4}, rng)), std::invalid_argument);
}
