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

#ifndef STABENT_STATE_H
#define STABENT_STATE_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "stabent/rng.h"

namespace stabent {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

constexpr double kNormTolerance = 1e-10;

/// Bipartition (d_A, d_B) of a qubit register. A holds the high-order qubits.
struct Shape {
    std::size_t d_a = 1;
    std::size_t d_b = 1;

    std::size_t dim() const {
        return d_a * d_b;
    }
    unsigned qubits() const;
    unsigned qubits_a() const;
    unsigned qubits_b() const;
    /// Throws unless both factors are powers of two.
    void validate() const;

    /// Shape with n_a qubits in A out of n total.
    static Shape from_qubits(unsigned n, unsigned n_a);

    bool operator==(const Shape &) const = default;
};

bool is_power_of_two(std::size_t v);

/// Normalized amplitude vector with amps[i * d_B + j] = <i_A, j_B | psi>.
class PureState {
   public:
    PureState(Amplitudes amps, Shape shape);
    /// Unipartite state with shape (1, d).
    explicit PureState(Amplitudes amps);

    const Amplitudes &amps() const {
        return amps_;
    }
    const Shape &shape() const {
        return shape_;
    }
    std::size_t dim() const {
        return amps_.size();
    }
    unsigned qubits() const {
        return shape_.qubits();
    }
    PureState with_shape(Shape shape) const;

    /// The d_A x d_B amplitude matrix.
    Eigen::MatrixXcd matrix() const;

   private:
    Amplitudes amps_;
    Shape shape_;
};

/// Descending Schmidt probabilities summing to one.
class SchmidtSpectrum {
   public:
    /// Validates nonnegativity, unit sum (within tol) and descending order.
    explicit SchmidtSpectrum(std::vector<double> lambdas, double tol = kNormTolerance);

    /// Sorts, clips tiny negatives and renormalizes; rejects entries off the simplex by more than tol.
    static SchmidtSpectrum normalized(std::vector<double> values, double tol);

    const std::vector<double> &lambdas() const {
        return lambdas_;
    }
    std::size_t size() const {
        return lambdas_.size();
    }
    double power_sum(int k) const;
    /// 1 - sum lambda^2.
    double e_lin() const;

    static SchmidtSpectrum product(std::size_t d_a);
    static SchmidtSpectrum flat(std::size_t d_a);
    /// Uniform draw on the simplex (Dirichlet(1,...,1)), sorted.
    static SchmidtSpectrum random(std::size_t d_a, RngStream &rng);

   private:
    std::vector<double> lambdas_;
};

struct Unitary {
    Eigen::MatrixXcd entries;

    std::size_t dim() const {
        return static_cast<std::size_t>(entries.rows());
    }
    /// max |(U^dag U - 1)_{ij}|.
    double unitarity_residual() const;
};

struct SchmidtDecomposition {
    SchmidtSpectrum spectrum;
    Eigen::MatrixXcd u_a;  // d_A x d_A
    Eigen::MatrixXcd u_b;  // d_B x d_B, with Psi = U_A D U_B^T
};

PureState haar_state(Shape shape, RngStream &rng);
Unitary haar_unitary(std::size_t d, RngStream &rng);

SchmidtDecomposition schmidt(const PureState &psi);
PureState reference_state(const SchmidtSpectrum &lambda, Shape shape);
/// (U_A x U_B) |psi^lambda> with independent Haar locals.
PureState orbit_sample(const SchmidtSpectrum &lambda, Shape shape, RngStream &rng);
/// (U_A x U_B) |psi>.
PureState apply_local(const PureState &psi, const Eigen::MatrixXcd &u_a, const Eigen::MatrixXcd &u_b);
/// Applies a full-register unitary.
PureState apply_unitary(const Eigen::MatrixXcd &u, const PureState &psi);

/// n-fold tensor power of the single-qubit state with Bloch vector (1,1,1)/sqrt(3). Shape (1, 2^n).
PureState golden_state(unsigned n);
/// a (x) b, with a's qubits high. Shape (a.dim(), b.dim()).
PureState tensor(const PureState &a, const PureState &b);

double e_lin(const PureState &psi);
/// Tr(psi_A^3) - Tr(psi_A^2)^2.
double antiflatness(const PureState &psi);
double antiflatness(const SchmidtSpectrum &lambda);
/// Tr(psi_A^3), computed from the reduced Gram matrix.
double reduced_cube_trace(const PureState &psi);

}  // namespace stabent

#endif
