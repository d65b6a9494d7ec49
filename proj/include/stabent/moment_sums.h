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

#ifndef STABENT_MOMENT_SUMS_H
#define STABENT_MOMENT_SUMS_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabent/permutation.h"
#include "stabent/rational.h"

namespace stabent {

/// Raised when two exact evaluations of the same quantity disagree.
class VerificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Per-conjugacy-class comparison between an enumerated Pauli sum and its tabulated polynomial.
struct ClassDiagnostic {
    CycleType type;
    BigInt enumerated;
    BigInt tabulated;
    bool matches = false;
};

/// Exact E[Tr((Q x Q) psi^{x 8})] for Haar psi in dimension d.
struct VarianceSumResult {
    std::int64_t d = 0;
    BigInt class_grouped_sum;  // sum of the tabulated per-class polynomials
    BigInt enumerated_sum;     // sum over all of S_8 of the per-permutation Pauli sums
    Rational value;            // E[(d Tr(Q psi^{x4}))^2] = enumerated_sum / (d^2 (d)_8)
    Rational target;           // 16 (d^2 + 15 d + 68) / ((d+3)(d+5)(d+6)(d+7))
    Rational variance;         // value - (4/(d+3))^2
    std::vector<ClassDiagnostic> classes;
};

/// Both evaluation paths; throws VerificationError if either disagrees with the target. d = 2^n, n <= 3.
VarianceSumResult verify_variance_sum(std::int64_t d);

Rational variance_sum_target(std::int64_t d);

/// Sum over S_8 with the n-qubit Pauli labels enumerated one by one (no qubit factorization). d <= 4.
BigInt variance_sum_explicit(std::int64_t d);

/// Exact Cov(E_lin, M_lin) from the S_6 sum.
struct CovarianceSumResult {
    std::int64_t d_a = 0;
    std::int64_t d_b = 0;
    BigInt enumerated_sum;                // sum_pi F_A(pi) F_B(pi), subsystem Paulis enumerated
    BigInt factorized_sum;                // same with single-qubit factorization
    Rational intermediate;                // E[Tr(psi_A^2) Tr(Q psi^{x4})]
    Rational expected_intermediate;       // 4 (d_A + d_B) / (d (d+1) (d+3))
    Rational tabulated_intermediate;      // 4 (d_A + d_B) / (d_A^4 d_B^3 (d+1) (d+3))
    Rational covariance;
    std::vector<ClassDiagnostic> classes;
};

/// Throws VerificationError if the covariance is nonzero or the two paths disagree.
CovarianceSumResult verify_covariance_sum(std::int64_t d_a, std::int64_t d_b);

}  // namespace stabent

#endif
