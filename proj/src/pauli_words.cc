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

#include "stabent/pauli_words.h"

#include <stdexcept>

#include "stabent/pauli.h"

namespace stabent {

namespace {

// Slot order of each cycle word: p, pi^-1(p), pi^-2(p), ...
std::vector<std::vector<int>> cycle_words(const Permutation &pi) {
    Permutation inv = pi.inverse();
    std::vector<std::vector<int>> words;
    for (const auto &c : pi.cycles()) {
        std::vector<int> w;
        int p = c.front();
        for (std::size_t i = 0; i < c.size(); i++) {
            w.push_back(p);
            p = inv[p];
        }
        words.push_back(std::move(w));
    }
    return words;
}

void check_labels(const Permutation &pi, const std::vector<int> &slot_vars, int num_vars) {
    if (static_cast<int>(slot_vars.size()) != pi.size()) {
        throw std::invalid_argument("Need one label per permutation slot");
    }
    if (num_vars < 0 || num_vars > 4) {
        throw std::invalid_argument("At most four Pauli variables are supported");
    }
    for (int v : slot_vars) {
        if (v != kIdentitySlot && (v < 0 || v >= num_vars)) {
            throw std::invalid_argument("Slot label out of range");
        }
    }
}

// Sum over assignments of Paulis on `qubits` qubits, as (real, imag) counts in units of 2^{qubits * cycles}.
GaussianInt enumerate(const Permutation &pi, const std::vector<int> &slot_vars, int num_vars, unsigned qubits) {
    auto words = cycle_words(pi);
    std::uint64_t per_var = std::uint64_t{1} << (2 * qubits);
    std::uint64_t mask = per_var - 1;
    std::uint64_t assignments = std::uint64_t{1} << (2 * qubits * num_vars);
    std::vector<PauliOp> ops(num_vars);
    long long counts[4] = {0, 0, 0, 0};
    for (std::uint64_t a = 0; a < assignments; a++) {
        for (int v = 0; v < num_vars; v++) {
            std::uint64_t code = (a >> (2 * qubits * v)) & mask;
            std::uint64_t x = code & ((std::uint64_t{1} << qubits) - 1);
            std::uint64_t z = code >> qubits;
            ops[v] = PauliOp::hermitian(PauliString(qubits, x, z));
        }
        unsigned phase = 0;
        bool zero = false;
        for (const auto &w : words) {
            PauliOp acc = PauliOp::identity();
            for (int slot : w) {
                if (slot_vars[slot] != kIdentitySlot) {
                    acc = acc * ops[slot_vars[slot]];
                }
            }
            if (acc.x != 0 || acc.z != 0) {
                zero = true;
                break;
            }
            phase += acc.phase;
        }
        if (!zero) {
            counts[phase & 3]++;
        }
    }
    GaussianInt out;
    out.re = BigInt(counts[0]) - counts[2];
    out.im = BigInt(counts[1]) - counts[3];
    // Every nonzero cycle trace carries a factor 2^qubits.
    BigInt scale = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(qubits * words.size()));
    out.re *= scale;
    out.im *= scale;
    return out;
}

}  // namespace

GaussianInt pauli_label_sum(const Permutation &pi, const std::vector<int> &slot_vars, int num_vars, unsigned n) {
    check_labels(pi, slot_vars, num_vars);
    GaussianInt single = enumerate(pi, slot_vars, num_vars, 1);
    GaussianInt out{1, 0};
    for (unsigned i = 0; i < n; i++) {
        out = out * single;
    }
    return out;
}

GaussianInt pauli_label_sum_explicit(const Permutation &pi, const std::vector<int> &slot_vars, int num_vars, unsigned n) {
    check_labels(pi, slot_vars, num_vars);
    if (2 * n * static_cast<unsigned>(num_vars) > 20) {
        throw std::invalid_argument("Explicit Pauli label enumeration limited to 4^(n vars) <= 2^20");
    }
    return enumerate(pi, slot_vars, num_vars, n);
}

}  // namespace stabent
