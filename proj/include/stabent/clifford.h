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

#ifndef STABENT_CLIFFORD_H
#define STABENT_CLIFFORD_H

#include <Eigen/Dense>
#include <vector>

#include "stabent/pauli.h"
#include "stabent/state.h"

namespace stabent {

/// Clifford unitary modulo global phase, stored as the signed images of X_0..X_{n-1}, Z_0..Z_{n-1}.
struct CliffordTableau {
    unsigned n = 0;
    std::vector<PauliOp> images;

    static CliffordTableau identity(unsigned n);

    /// C P C^dagger for any Pauli operator P.
    PauliOp conjugate(const PauliOp &p) const;
    /// Images are Hermitian and obey the same commutation relations as the generators.
    bool is_symplectic() const;

    bool operator==(const CliffordTableau &) const = default;
    bool operator<(const CliffordTableau &other) const;
};

struct CliffordElement {
    CliffordTableau tableau;
    Eigen::MatrixXcd unitary;
};

/// Dense matrix of i^phase X^x Z^z on n qubits.
Eigen::MatrixXcd pauli_op_matrix(const PauliOp &op, unsigned n);

/// Breadth-first closure over H_i, S_i and CNOT_ij, deduplicated by tableau. n in {1, 2}.
std::vector<CliffordElement> enumerate_clifford(unsigned n);

/// Cached enumeration, built on first use.
const std::vector<CliffordElement> &clifford_group(unsigned n);

/// Distinct states C|0...0>, up to global phase.
std::vector<PureState> clifford_orbit_states(unsigned n);

/// Mean of the (1|1) anti-flatness over all 11520 two-qubit Cliffords applied to psi.
double clifford_orbit_antiflatness(const PureState &psi);

}  // namespace stabent

#endif
