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

#ifndef STABENT_WEINGARTEN_H
#define STABENT_WEINGARTEN_H

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "stabent/permutation.h"
#include "stabent/rational.h"
#include "stabent/state.h"

namespace stabent {

/// Gram matrix Omega_{pi sigma} = d^{cycles(pi^-1 sigma)} over S_k and its pseudo-inverse.
struct WeingartenTable {
    int k = 0;
    std::int64_t d = 0;
    std::vector<Permutation> perms;  // enumerate_sym(k) order
    Eigen::MatrixXd gram;
    Eigen::MatrixXd wg;
    int rank = 0;

    /// Singular values below tol * max are truncated.
    static WeingartenTable build(int k, std::int64_t d, double tol = 1e-12);

    /// max |wg gram - 1|.
    double inverse_residual() const;
    /// max |gram wg gram - gram|.
    double pinv_residual() const;
};

/// Checks sum_pi d^{cycles(pi)} = d (d+1) ... (d+k-1) and returns 1 / that product,
/// the normalization of E[psi^{x k}] = (1/(d)_k) sum_pi T_pi. Throws VerificationError on mismatch.
Rational haar_moment_normalization(int k, std::int64_t d);

/// Tr[T_pi Q] for Q = d^-2 sum_P P^{x 4} on d = 2^n; pi in S_4.
Rational trace_perm_q(const Permutation &pi, std::int64_t d);

/// Orbit average of M_lin by Weingarten integration over U(d_A) x U(d_B): returns 1 - d I.
///
/// I = sum W^A_{pi sigma} W^B_{gamma delta} Tr[T_pi Q_A] Tr[T_gamma Q_B] Tr[(T_sigma^-1 x T_delta^-1) psi^{x 4}],
/// with the state contraction evaluated as an explicit index sum over [d_A]^4.
double orbit_average_weingarten(const SchmidtSpectrum &lambda, std::int64_t d_a, std::int64_t d_b);

/// One row of the S_4 table of delta patterns Tr[T_sigma |ijkl><mnop|] and Tr[T_sigma Q].
struct MelpermRow {
    std::string sigma;
    std::string tabulated_pattern;
    std::string computed_pattern;
    std::string tabulated_trace_q;  // "d^2", "d" or "1"
    std::string computed_trace_q;
    bool pattern_matches = false;
    bool trace_q_matches = false;
};

/// Recomputes each tabulated row from the permutation operator convention.
std::vector<MelpermRow> check_melperm_table();

}  // namespace stabent

#endif
