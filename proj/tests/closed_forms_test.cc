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

#include "stabent/closed_forms.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace stabent;

namespace {

Rational q(long a, long b = 1) {
    return Rational(a, b);
}

std::vector<Rational> flat(long d_a) {
    return std::vector<Rational>(d_a, q(1, d_a));
}

std::vector<Rational> product(long d_a) {
    std::vector<Rational> v(d_a, q(0));
    v[0] = 1;
    return v;
}

}  // namespace

TEST(closed_forms, haar_moments) {
    EXPECT_EQ(mean_e_lin(2, 2), q(1, 5));
    EXPECT_EQ(mean_e_lin(2, 8), q(7, 17));
    EXPECT_GT(to_double(mean_e_lin(1024, 1024)), 0.998);
    EXPECT_EQ(var_e_lin(2, 2), q(3, 175));
    EXPECT_EQ(var_e_lin(2, 4), q(1, 99));
    EXPECT_EQ(var_e_lin(1, 8), 0);
    EXPECT_EQ(mean_m_lin(4), q(3, 7));
    EXPECT_EQ(var_m_lin(2), q(4, 525));
    EXPECT_EQ(var_m_lin(1), 0);
    EXPECT_EQ(covariance_e_m(), 0);
}

TEST(closed_forms, orbit_coefficients_values) {
    OrbitCoefficients c = orbit_coefficients(2, 2);
    EXPECT_EQ(c.alpha, q(-3, 5));
    EXPECT_EQ(c.beta, q(108, 25));
    EXPECT_EQ(c.gamma, q(-102, 25));
    EXPECT_EQ(c.delta, q(-72, 25));
    EXPECT_EQ(c.mu, q(96, 25));
    EXPECT_EQ(orbit_coefficients(2, 4).mu, q(-144, 35));
    EXPECT_THROW(orbit_coefficients(3, 4), std::domain_error);
    EXPECT_THROW(orbit_coefficients(2, 3), std::domain_error);
}

TEST(closed_forms, mbar_special_cases) {
    EXPECT_NEAR(mbar(SchmidtSpectrum({1.0, 0.0}), 2, 2), 0.36, 1e-15);
    EXPECT_NEAR(mbar(SchmidtSpectrum({0.5, 0.5}), 2, 2), 0.3, 1e-15);
    EXPECT_EQ(mbar_exact(flat(2), 2, 2), q(3, 10));
    EXPECT_EQ(mbar_separable(2, 2), q(9, 25));
    EXPECT_EQ(mbar_maxent(2, 2), q(3, 10));
    EXPECT_EQ(mbar_separable(2, 4), q(19, 35));
    EXPECT_EQ(mbar_separable(4, 4), q(33, 49));
    EXPECT_EQ(mbar_maxent(2, 4), q(17, 28));
    EXPECT_EQ(mbar_maxent(4, 4), q(165, 224));
    EXPECT_EQ(mbar_maxent(2, 8), q(69, 88));
}

TEST(closed_forms, mbar_displays_agree_with_coefficient_form) {
    for (long a : {2, 4, 8, 16}) {
        for (long b : {2, 4, 8, 16, 32}) {
            if (b < a) {
                continue;
            }
            EXPECT_EQ(mbar_exact(product(a), a, b), mbar_separable(a, b)) << a << "," << b;
            EXPECT_EQ(mbar_exact(flat(a), a, b), mbar_maxent(a, b)) << a << "," << b;
        }
    }
}

TEST(closed_forms, mbar_exact_matches_double) {
    RngStream rng(31, 0);
    for (long a : {2, 4}) {
        for (int rep = 0; rep < 10; rep++) {
            // Rational spectrum with denominators 1000.
            std::vector<long> parts(a);
            long left = 1000;
            for (long i = 0; i < a - 1; i++) {
                parts[i] = static_cast<long>(rng.uniform() * static_cast<double>(left));
                left -= parts[i];
            }
            parts[a - 1] = left;
            std::sort(parts.begin(), parts.end(), std::greater<>());
            std::vector<Rational> lr;
            std::vector<double> ld;
            for (long p : parts) {
                lr.push_back(q(p, 1000));
                ld.push_back(static_cast<double>(p) / 1000.0);
            }
            EXPECT_NEAR(to_double(mbar_exact(lr, a, 8)), mbar(SchmidtSpectrum(ld), a, 8), 1e-13);
        }
    }
}

TEST(closed_forms, mbar_asymptotic_expansions) {
    EXPECT_NEAR(mbar_asymptotic(1.0, 0.0, 0.0, 1 << 20, 1 << 20), 1.0, 1e-10);
    // Separable limit agrees with the exact value to O(d^{-3/2}).
    double d = 32.0 * 32.0;
    double sep = to_double(mbar_separable(32, 32));
    EXPECT_LT(std::abs(mbar_asymptotic(0.0, 1.0, 1.0, 32, 32) - sep), 1.0 / std::pow(d, 1.5));
    // Residual scales as d^-3 with a coefficient independent of d.
    RngStream rng(32, 0);
    std::vector<double> worst;
    for (long da : {8, 16, 32}) {
        double dd = static_cast<double>(da * da);
        double m = 0;
        for (int rep = 0; rep < 20; rep++) {
            SchmidtSpectrum lam = SchmidtSpectrum::random(da, rng);
            double exact = mbar(lam, da, da);
            double approx = mbar_asymptotic(lam.e_lin(), lam.power_sum(3), lam.power_sum(4), da, da);
            m = std::max(m, std::abs(exact - approx) * dd * dd * dd);
        }
        EXPECT_LT(m, 600.0) << da;
        worst.push_back(m);
    }
    EXPECT_LT(std::abs(worst[2] - worst[1]), 0.1 * worst[2]);
    // Unbalanced expansion: error shrinks with d_B at fixed d_A.
    SchmidtSpectrum lam = SchmidtSpectrum::random(16, rng);
    double e1 = std::abs(mbar(lam, 16, 256) -
                         mbar_asymptotic_unbalanced(lam.e_lin(), lam.power_sum(3), lam.power_sum(4), 16, 256));
    double e2 = std::abs(mbar(lam, 16, 4096) -
                         mbar_asymptotic_unbalanced(lam.e_lin(), lam.power_sum(3), lam.power_sum(4), 16, 4096));
    EXPECT_LT(e2, e1);
    EXPECT_LT(e1, 1e-4);
}

TEST(closed_forms, mtilde_2xdB_values) {
    EXPECT_NEAR(mtilde_2xdB(0, 2), 0.36, 1e-15);
    EXPECT_NEAR(mtilde_2xdB(0.5, 2), 0.3, 1e-15);
    EXPECT_NEAR(mtilde_2xdB(0, 8), 312.0 / 440.0, 1e-15);
    EXPECT_THROW(mtilde_2xdB(0.51, 2), std::domain_error);
    EXPECT_THROW(mtilde_2xdB(-0.01, 2), std::domain_error);
    for (long b : {2, 4, 8, 16}) {
        EXPECT_EQ(mtilde_2xdB_exact(0, b), mbar_separable(2, b));
        EXPECT_EQ(mtilde_2xdB_exact(q(1, 2), b), mbar_maxent(2, b));
        // For d_A = 2 the orbit average depends on e alone.
        for (long k = 0; k <= 10; k++) {
            Rational l1 = q(1, 2) + q(k, 20);
            Rational e = 1 - l1 * l1 - (1 - l1) * (1 - l1);
            EXPECT_EQ(mtilde_2xdB_exact(e, b), mbar_exact({l1, 1 - l1}, 2, b));
        }
    }
    // The large-d_B form converges at rate 1/d_B^2.
    double r1 = std::abs(mtilde_2xdB(0.3, 64) - mtilde_2xdB_asymptotic(0.3, 64));
    double r2 = std::abs(mtilde_2xdB(0.3, 128) - mtilde_2xdB_asymptotic(0.3, 128));
    EXPECT_NEAR(r1 / r2, 4.0, 0.3);
}

TEST(closed_forms, marginal_2xdB) {
    EXPECT_NEAR(marginal_pe_2xdB(0, 2), 3.0, 1e-12);
    EXPECT_NEAR(marginal_pe_2xdB(0.3, 2), 3 * std::sqrt(0.4), 1e-12);
    EXPECT_NEAR(marginal_pe_2xdB(0.3, 4), 52.5 * 0.09 * std::sqrt(0.4), 1e-12);
    EXPECT_THROW(marginal_pe_2xdB(0.5, 2), std::domain_error);
    // Prefactor 2^{d_B} Gamma(d_B + 1/2) / (sqrt(pi) Gamma(d_B - 1)); 2815.3125 at d_B = 8.
    EXPECT_NEAR(marginal_pe_2xdB(0.25, 8), 2815.3125 * std::pow(0.25, 6) * std::sqrt(0.5), 1e-10);
    for (long b : {2, 4, 8, 16}) {
        EXPECT_NEAR(marginal_mass_2xdB(0, 0.5, b), 1.0, 1e-8) << b;
        EXPECT_NEAR(haar_consistency_2xdB(b), to_double(mean_m_lin(2 * b)), 1e-8) << b;
        EXPECT_NEAR(marginal_mass_2xdB(0, 0.2, b) + marginal_mass_2xdB(0.2, 0.5, b), 1.0, 1e-10);
    }
    EXPECT_NEAR(haar_consistency_2xdB(2), 3.0 / 7.0, 1e-8);
    EXPECT_NEAR(haar_consistency_2xdB(4), 7.0 / 11.0, 1e-8);
    EXPECT_NEAR(haar_consistency_2xdB(8), 15.0 / 19.0, 1e-8);
    double avg = mtilde_bin_average_2xdB(0.2, 0.21, 4);
    EXPECT_GT(avg, mtilde_2xdB(0.2, 4));
    EXPECT_LT(avg, mtilde_2xdB(0.21, 4));
}

TEST(closed_forms, clifford_prefactor) {
    EXPECT_EQ(clifford_antiflat_prefactor(2, 4), q(1, 10));
    EXPECT_EQ(clifford_antiflat_prefactor(2, 8), q(1, 14));
    EXPECT_EQ(clifford_antiflat_prefactor(8, 8), 0);
}

TEST(closed_forms, antiflat_decomposition) {
    auto sum = [](const AntiflatDecomposition &p) { return p.delta_times_f + p.g_of_e + p.residual; };
    AntiflatDecomposition sep = mbar_antiflat_decomposition(SchmidtSpectrum({1.0, 0.0}), 2, 2);
    EXPECT_NEAR(sep.delta_times_f, 0.0, 1e-15);
    EXPECT_NEAR(sum(sep), 0.36, 1e-12);
    EXPECT_NEAR(sum(mbar_antiflat_decomposition(SchmidtSpectrum({0.5, 0.5}), 2, 2)), 0.3, 1e-12);
    EXPECT_NEAR(mbar_antiflat_decomposition(SchmidtSpectrum::flat(8), 8, 16).delta_times_f, 0.0, 1e-15);
    RngStream rng(33, 0);
    for (auto [a, b] : {std::pair<long, long>{2, 2}, {2, 4}, {4, 4}, {2, 8}, {4, 8}}) {
        for (int rep = 0; rep < 100; rep++) {
            SchmidtSpectrum lam = SchmidtSpectrum::random(a, rng);
            EXPECT_NEAR(sum(mbar_antiflat_decomposition(lam, a, b)), mbar(lam, a, b), 1e-12);
        }
    }
}

TEST(closed_forms, concentration_bounds) {
    ConcentrationBounds b = bounds(0.1, 32, 32, 0.3);
    EXPECT_NEAR(b.levy_m_bound, 2.9866164, 1e-7);
    EXPECT_NEAR(b.bhatia_davis_bound, 0.21, 1e-15);
    EXPECT_NEAR(bounds(1.0, 2, 2, 0.3).chebyshev_orbit_variance, 1.6384, 1e-12);
    EXPECT_NEAR(b.haar_chebyshev_bound, to_double(var_m_lin(1024)) / 0.01, 1e-15);
    EXPECT_THROW(bounds(0.0, 2, 2, 0.3), std::invalid_argument);
}
