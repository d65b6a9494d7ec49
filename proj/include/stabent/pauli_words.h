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

#ifndef STABENT_PAULI_WORDS_H
#define STABENT_PAULI_WORDS_H

#include <vector>

#include "stabent/permutation.h"
#include "stabent/rational.h"

namespace stabent {

/// Exact a + b i.
struct GaussianInt {
    BigInt re = 0;
    BigInt im = 0;

    GaussianInt operator*(const GaussianInt &o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt &operator+=(const GaussianInt &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    bool operator==(const GaussianInt &) const = default;
};

constexpr int kIdentitySlot = -1;

/// Sum over all assignments of n-qubit Hermitian Pauli strings to `num_vars` variables of
///   Tr[T_pi (A_1 x ... x A_k)],
/// where slot p carries A_p = variable slot_vars[p] (or the identity for kIdentitySlot).
///
/// Traces of tensor products factor over qubits, so this is the single-qubit sum to the n-th power.
GaussianInt pauli_label_sum(const Permutation &pi, const std::vector<int> &slot_vars, int num_vars, unsigned n);

/// Same sum by enumerating all 4^(n num_vars) n-qubit assignments.
GaussianInt pauli_label_sum_explicit(const Permutation &pi, const std::vector<int> &slot_vars, int num_vars, unsigned n);

}  // namespace stabent

#endif
