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

#ifndef STABENT_CLOSED_FORMS_H
#define STABENT_CLOSED_FORMS_H

#include <cstdint>
#include <vector>

#include "stabent/rational.h"
#include "stabent/state.h"

namespace stabent {

// Haar moments of E_lin and M_lin. Dimensions are plain integers; M_lin moments
// take the total dimension d = d_A d_B.
Rational mean_e_lin(std::int64_t d_a, std::int64_t d_b);
Rational var_e_lin(std::int64_t d_a, std::int64_t d_b);
Rational mean_m_lin(std::int64_t d);
Rational var_m_lin(std::int64_t d);

/// Haar covariance of E_lin and M_lin. It vanishes for every bipartition.
Rational covariance_e_m();

/// Coefficients of the Schmidt-orbit average
///   Mbar(lambda) = alpha + beta e + gamma e^2 + delta sum lambda^3 + mu sum lambda^4.
struct OrbitCoefficients {
    Rational alpha;
    Rational beta;
    Rational gamma;
    Rational delta;
    Rational mu;
};

/// Throws std::domain_error at the poles d_A = 3 or d_B = 3.
OrbitCoefficients orbit_coefficients(std::int64_t d_a, std::int64_t d_b);

double mbar(const SchmidtSpectrum &lambda, std::int64_t d_a, std::int64_t d_b);
/// Exact orbit average for a rational spectrum of length d_A.
Rational mbar_exact(const std::vector<Rational> &lambda, std::int64_t d_a, std::int64_t d_b);
Rational mbar_separable(std::int64_t d_a, std::int64_t d_b);
/// Maximally entangled orbit, from its standalone closed form.
Rational mbar_maxent(std::int64_t d_a, std::int64_t d_b);

/// Large-d expansion with d_A = d_B = sqrt(d), through O(d^{-5/2}).
double mbar_asymptotic(double e, double sum_cube, double sum_quartic, std::int64_t d_a, std::int64_t d_b);
/// Expansion for d_B >> d_A >> 1.
double mbar_asymptotic_unbalanced(double e, double sum_cube, double sum_quartic, std::int64_t d_a, std::int64_t d_b);

/// Mean M_lin at fixed e for a 2 x d_B system; e in [0, 1/2].
double mtilde_2xdB(double e, std::int64_t d_b);
Rational mtilde_2xdB_exact(const Rational &e, std::int64_t d_b);
/// Leading large-d_B form 1 - 8(3e^2 - 3e + 2)/(5 d_B).
double mtilde_2xdB_asymptotic(double e, std::int64_t d_b);

/// Haar density of e for a 2 x d_B system; e in [0, 1/2).
double marginal_pe_2xdB(double e, std::int64_t d_b);
/// Probability mass of e in [lo, hi] (clipped to [0, 1/2]).
double marginal_mass_2xdB(double lo, double hi, std::int64_t d_b);
/// Density-weighted mean of mtilde over [lo, hi]; NaN for an empty interval.
double mtilde_bin_average_2xdB(double lo, double hi, std::int64_t d_b);
/// Integral of mtilde times the density over [0, 1/2].
double haar_consistency_2xdB(std::int64_t d_b);

/// Prefactor relating the Clifford-averaged anti-flatness to M_lin.
Rational clifford_antiflat_prefactor(std::int64_t d_a, std::int64_t d);

/// Split of the orbit average as delta F_A + G(e) + mu sum lambda^4.
struct AntiflatDecomposition {
    double delta_times_f = 0;
    double g_of_e = 0;
    double residual = 0;
};
AntiflatDecomposition mbar_antiflat_decomposition(const SchmidtSpectrum &lambda, std::int64_t d_a, std::int64_t d_b);

struct ConcentrationBounds {
    double levy_m_bound = 0;             // Haar tail bound 3 exp(-eps^2 d / (729 pi))
    double haar_chebyshev_bound = 0;     // var_m_lin(d) / eps^2
    double chebyshev_orbit_variance = 0; // orbit variance bound 16 d_A^3 d_B^3 / ((d_A^2-9)^2 (d_B^2-9)^2)
    double chebyshev_orbit_bound = 0;    // orbit variance bound / eps^2
    double bhatia_davis_bound = 0;       // mbar (1 - mbar)
};
ConcentrationBounds bounds(double eps, std::int64_t d_a, std::int64_t d_b, double mbar_value);

double bhatia_davis(double mean);

}  // namespace stabent

#endif
