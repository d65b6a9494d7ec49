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

#ifndef STABENT_PAULI_H
#define STABENT_PAULI_H

#include <bit>
#include <cstdint>
#include <string>

namespace stabent {

/// Hermitian n-qubit Pauli string in (x, z) bit-pair encoding.
///
/// Qubit q corresponds to bit q of a computational-basis index. Per qubit,
/// (x, z) = (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y. Strings carry no
/// phase; the operator is always the Hermitian representative.
struct PauliString {
    unsigned n = 0;
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;

    PauliString() = default;
    PauliString(unsigned n, std::uint64_t x_mask, std::uint64_t z_mask);

    /// Parses e.g. "XIZY" where character q is qubit q.
    static PauliString from_text(const std::string &text);
    std::string str() const;

    bool is_identity() const {
        return x_mask == 0 && z_mask == 0;
    }

    /// Number of Y factors, i.e. the power of i relating the Hermitian
    /// representative to the product X^x Z^z.
    unsigned y_count() const {
        return static_cast<unsigned>(std::popcount(x_mask & z_mask));
    }

    bool operator==(const PauliString &) const = default;
};

/// Pauli operator with an explicit global phase: i^phase * X^x Z^z (XZ-ordered).
///
/// Used where exact products matter (permutation trace sums, Clifford tableaux).
struct PauliOp {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    std::uint8_t phase = 0;  // power of i, mod 4

    static PauliOp identity() {
        return {};
    }
    /// The Hermitian representative of a string, with optional sign flip.
    static PauliOp hermitian(const PauliString &p, bool negative = false);

    PauliOp operator*(const PauliOp &rhs) const;

    bool is_hermitian() const {
        return ((phase + std::popcount(x & z)) & 1) == 0;
    }
    /// For Hermitian ops: true when the op equals minus its Hermitian representative.
    bool sign() const;

    bool operator==(const PauliOp &) const = default;
};

/// Tr(op) on n qubits as i^k * 2^n; returns (is_nonzero, k).
inline bool pauli_trace_phase(const PauliOp &op, std::uint8_t *phase_out) {
    if (op.x != 0 || op.z != 0) {
        return false;
    }
    *phase_out = op.phase & 3;
    return true;
}

}  // namespace stabent

#endif
