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

#include "stabent/state.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "stabent/pauli_kernel.h"

using namespace stabent;

namespace {

PureState bell() {
    double h = 1 / std::sqrt(2.0);
    return PureState({h, 0, 0, h}, Shape{2, 2});
}

}  // namespace

TEST(state, validation) {
    EXPECT_THROW(PureState({1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(PureState({1.0, 0, 0}, Shape{1, 3}), std::invalid_argument);
    EXPECT_THROW(PureState({1.0, 0}, Shape{2, 2}), std::invalid_argument);
    EXPECT_NO_THROW(PureState({1.0, 0, 0, 0}, Shape{2, 2}));
    EXPECT_THROW(SchmidtSpectrum({0.3, 0.7}), std::invalid_argument);
    EXPECT_THROW(SchmidtSpectrum({0.7, 0.2}), std::invalid_argument);
    EXPECT_THROW(SchmidtSpectrum({1.1, -0.1}), std::invalid_argument);
}

TEST(state, haar_state_norm_and_replay) {
    RngStream a(5, 3);
    RngStream b(5, 3);
    for (int i = 0; i < 10; i++) {
        PureState x = haar_state(Shape{4, 8}, a);
        PureState y = haar_state(Shape{4, 8}, b);
        double n = 0;
        for (auto v : x.amps()) {
            n += std::norm(v);
        }
        EXPECT_NEAR(n, 1.0, 1e-12);
        EXPECT_EQ(x.amps(), y.amps());
    }
    RngStream c(5, 4);
    EXPECT_NE(haar_state(Shape{2, 2}, c).amps(), haar_state(Shape{2, 2}, a).amps());
}

TEST(state, haar_e_lin_moments) {
    RngStream rng(21, 0);
    const int n = 100000;
    double s = 0;
    double s2 = 0;
    for (int i = 0; i < n; i++) {
        double e = e_lin(haar_state(Shape{2, 2}, rng));
        s += e;
        s2 += e * e;
    }
    double mean = s / n;
    double var = s2 / n - mean * mean;
    EXPECT_NEAR(mean, 0.2, 3 * std::sqrt(var / n));
    // s.e. of the variance, assuming fourth moment is bounded by a Gaussian-like ratio.
    EXPECT_NEAR(var, 3.0 / 175.0, 3 * var * std::sqrt(2.0 / n) * 2);
}

TEST(state, haar_unitary_properties) {
    RngStream rng(22, 0);
    for (std::size_t d : {1, 2, 3, 8}) {
        EXPECT_LT(haar_unitary(d, rng).unitarity_residual(), 1e-9);
    }
    const int n = 10000;
    double s = 0;
    double s2 = 0;
    for (int i = 0; i < n; i++) {
        double v = std::norm(haar_unitary(2, rng).entries(0, 0));
        s += v;
        s2 += v * v;
    }
    double mean = s / n;
    double se = std::sqrt((s2 / n - mean * mean) / n);
    EXPECT_NEAR(mean, 0.5, 3 * se);
}

TEST(state, haar_unitary_eigenphases_uniform) {
    // Haar eigenvalue angles are marginally uniform on the circle.
    RngStream rng(23, 0);
    const int samples = 10000;
    const int bins = 16;
    std::vector<double> counts(bins, 0);
    for (int i = 0; i < samples; i++) {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(haar_unitary(8, rng).entries);
        for (int k = 0; k < 8; k++) {
            double a = std::arg(es.eigenvalues()(k)) + std::numbers::pi;
            int b = std::min(bins - 1, static_cast<int>(a / (2 * std::numbers::pi) * bins));
            counts[b] += 1;
        }
    }
    double expected = samples * 8.0 / bins;
    double chi2 = 0;
    for (double c : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // Critical value of chi^2 with 15 degrees of freedom at the 1% level.
    EXPECT_LT(chi2, 30.58);
}

TEST(state, schmidt_examples) {
    PureState prod({1.0, 0, 0, 0}, Shape{2, 2});
    auto d = schmidt(prod);
    EXPECT_NEAR(d.spectrum.lambdas()[0], 1.0, 1e-14);
    EXPECT_NEAR(d.spectrum.lambdas()[1], 0.0, 1e-14);
    auto b = schmidt(bell());
    EXPECT_NEAR(b.spectrum.lambdas()[0], 0.5, 1e-14);
    EXPECT_NEAR(b.spectrum.lambdas()[1], 0.5, 1e-14);
    EXPECT_THROW(schmidt(prod.with_shape(Shape{4, 1})), std::invalid_argument);
}

TEST(state, schmidt_reconstruction_and_round_trip) {
    RngStream rng(24, 0);
    for (Shape s : {Shape{2, 2}, Shape{2, 8}, Shape{4, 4}, Shape{4, 16}}) {
        PureState psi = haar_state(s, rng);
        auto dec = schmidt(psi);
        Eigen::MatrixXcd dm = Eigen::MatrixXcd::Zero(s.d_a, s.d_b);
        double total = 0;
        for (std::size_t i = 0; i < s.d_a; i++) {
            dm(i, i) = std::sqrt(dec.spectrum.lambdas()[i]);
            total += dec.spectrum.lambdas()[i];
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
        EXPECT_LT((psi.matrix() - dec.u_a * dm * dec.u_b.transpose()).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_NEAR(e_lin(psi), dec.spectrum.e_lin(), 1e-12);

        SchmidtSpectrum lam = SchmidtSpectrum::random(s.d_a, rng);
        auto back = schmidt(reference_state(lam, s)).spectrum;
        for (std::size_t i = 0; i < s.d_a; i++) {
            EXPECT_NEAR(back.lambdas()[i], lam.lambdas()[i], 1e-10);
        }
    }
}

TEST(state, reference_state_examples) {
    PureState r = reference_state(SchmidtSpectrum({1.0, 0.0}), Shape{2, 2});
    EXPECT_EQ(r.amps()[0], Complex(1.0));
    PureState b = reference_state(SchmidtSpectrum({0.5, 0.5}), Shape{2, 2});
    for (std::size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(std::abs(b.amps()[i] - bell().amps()[i]), 0.0, 1e-15);
    }
    EXPECT_THROW(reference_state(SchmidtSpectrum({1.0}), Shape{2, 2}), std::invalid_argument);
}

TEST(state, orbit_sample_keeps_spectrum) {
    RngStream rng(25, 0);
    for (Shape s : {Shape{2, 2}, Shape{2, 4}, Shape{4, 8}}) {
        for (int rep = 0; rep < 20; rep++) {
            SchmidtSpectrum lam = SchmidtSpectrum::random(s.d_a, rng);
            PureState psi = orbit_sample(lam, s, rng);
            EXPECT_NEAR(e_lin(psi), lam.e_lin(), 1e-9);
            auto got = schmidt(psi).spectrum;
            for (std::size_t i = 0; i < s.d_a; i++) {
                EXPECT_NEAR(got.lambdas()[i], lam.lambdas()[i], 1e-9);
            }
        }
        PureState p = orbit_sample(SchmidtSpectrum::product(s.d_a), s, rng);
        EXPECT_NEAR(e_lin(p), 0.0, 1e-12);
    }
}

TEST(state, bell_orbit_mean_magic) {
    RngStream rng(26, 0);
    const int n = 100000;
    double s = 0;
    double s2 = 0;
    SchmidtSpectrum flat = SchmidtSpectrum::flat(2);
    for (int i = 0; i < n; i++) {
        double m = m_lin(orbit_sample(flat, Shape{2, 2}, rng));
        s += m;
        s2 += m * m;
    }
    double mean = s / n;
    double se = std::sqrt((s2 / n - mean * mean) / n);
    EXPECT_NEAR(mean, 0.3, 3 * se);
}

TEST(state, e_lin_examples) {
    EXPECT_NEAR(e_lin(PureState({1.0, 0, 0, 0}, Shape{2, 2})), 0.0, 1e-15);
    EXPECT_NEAR(e_lin(bell()), 0.5, 1e-15);
    double h = 1 / std::sqrt(2.0);
    Amplitudes ghz(8);
    ghz[0] = h;
    ghz[7] = h;
    EXPECT_NEAR(e_lin(PureState(ghz, Shape{2, 4})), 0.5, 1e-15);
    EXPECT_NEAR(e_lin(PureState(ghz, Shape{4, 2})), 0.5, 1e-15);
    EXPECT_NEAR(e_lin(tensor(golden_state(1), golden_state(1))), 0.0, 1e-14);
}

TEST(state, local_invariance_and_concurrence) {
    RngStream rng(27, 0);
    for (int rep = 0; rep < 20; rep++) {
        Shape s{2, 8};
        PureState psi = haar_state(s, rng);
        PureState moved = apply_local(psi, haar_unitary(2, rng).entries, haar_unitary(8, rng).entries);
        EXPECT_NEAR(e_lin(moved), e_lin(psi), 1e-10);
        // For two-qubit states sqrt(2 E_lin) equals the concurrence 2|ad - bc|.
        PureState q = haar_state(Shape{2, 2}, rng);
        const auto &a = q.amps();
        double concurrence = 2 * std::abs(a[0] * a[3] - a[1] * a[2]);
        EXPECT_NEAR(std::sqrt(2 * e_lin(q)), concurrence, 1e-10);
        double renyi2 = -std::log2(1 - e_lin(q));
        EXPECT_TRUE(std::isfinite(renyi2));
    }
}

TEST(state, antiflatness_examples) {
    EXPECT_NEAR(antiflatness(PureState({1.0, 0, 0, 0}, Shape{2, 2})), 0.0, 1e-15);
    EXPECT_NEAR(antiflatness(bell()), 0.0, 1e-15);
    SchmidtSpectrum lam({0.75, 0.25});
    EXPECT_NEAR(antiflatness(lam), 0.046875, 1e-15);
    EXPECT_NEAR(antiflatness(reference_state(lam, Shape{2, 4})), 0.046875, 1e-14);
    EXPECT_NEAR(antiflatness(SchmidtSpectrum::flat(4)), 0.0, 1e-15);
}

TEST(state, golden_state_magic) {
    EXPECT_NEAR(m_lin(golden_state(1)), 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(m2(golden_state(2)), 2 * std::log2(1.5), 1e-12);
}
