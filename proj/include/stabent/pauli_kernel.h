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

#ifndef STABENT_PAULI_KERNEL_H
#define STABENT_PAULI_KERNEL_H

#include <cstdint>
#include <span>

#include "stabent/pauli.h"
#include "stabent/rational.h"
#include "stabent/state.h"

namespace stabent {

struct PauliSpectrumSummary {
    std::size_t d = 0;
    double sum_sq = 0;       // sum_P <P>^2
    double sum_quartic = 0;  // sum_P <P>^4
};

struct KernelOptions {
    unsigned qubit_cap = 12;
};

enum class LogBase { two, natural };

/// <psi|P|psi> in O(d) without materializing P.
double pauli_expectation(const PauliString &p, const PureState &psi);
double pauli_expectation(const PauliString &p, std::span<const Complex> amps);

/// Exact Pauli spectrum sums over all 4^n strings.
///
/// Strings are grouped by X mask; for a fixed mask the 2^n expectation values
/// are one Walsh-Hadamard transform of the overlap vector conj(psi[j^x]) psi[j],
/// so the total cost is O(n 4^n).
PauliSpectrumSummary pauli_spectrum(const PureState &psi, const KernelOptions &opts = {});

/// Contribution of the X masks in [x_begin, x_end). Disjoint ranges sum to the full spectrum.
PauliSpectrumSummary pauli_spectrum_partial(std::span<const Complex> amps, std::uint64_t x_begin, std::uint64_t x_end);

/// Reference implementation: one pauli_expectation per string, O(8^n).
PauliSpectrumSummary pauli_spectrum_bruteforce(const PureState &psi);

/// Adds partial sums (used to reduce range partitions).
PauliSpectrumSummary merge(const PauliSpectrumSummary &a, const PauliSpectrumSummary &b);

/// SP = (1/d) sum_P <P>^4.
double stabilizer_purity(const PureState &psi, const KernelOptions &opts = {});
double m_lin(const PureState &psi, const KernelOptions &opts = {});
/// -log SP, base 2 by default.
double m2(const PureState &psi, LogBase base = LogBase::two, const KernelOptions &opts = {});

/// sum_{P_1..P_m} Tr[(P_1 ... P_m)^k] over n-qubit strings, from the per-qubit closed form.
BigInt pauli_power_trace_sum_closed(unsigned n, unsigned m, unsigned k);
/// Same sum by explicit matrix products. Requires n <= 3, k <= 8 and 4^(n m) <= 65536.
BigInt pauli_power_trace_sum_bruteforce(unsigned n, unsigned m, unsigned k);

}  // namespace stabent

#endif
