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

#ifndef STABENT_MC_ENGINE_H
#define STABENT_MC_ENGINE_H

#include <cstdint>
#include <string>
#include <vector>

#include "stabent/estimators.h"
#include "stabent/pauli_kernel.h"
#include "stabent/state.h"

namespace stabent {

struct SamplerOptions {
    ChunkPolicy chunks;
    KernelOptions kernel;
};

struct JointSample {
    double e = 0;
    double m = 0;
};

/// Per-sample (E_lin, M_lin) of N Haar states; chunk c draws from stream (seed, c).
std::vector<JointSample> sample_haar(Shape shape, std::uint64_t n, std::uint64_t seed, const SamplerOptions &opts = {});

/// Per-sample values on the local-unitary orbit of the reference state with spectrum lambda.
/// Throws if any sample's E_lin differs from 1 - sum lambda^2 by more than 1e-9.
std::vector<JointSample> sample_orbit(const SchmidtSpectrum &lambda, Shape shape, std::uint64_t n, std::uint64_t seed,
                                      const SamplerOptions &opts = {});

/// Haar moments of (E_lin, M_lin); n >= 1000.
EstimatorSummary estimate_haar_joint(Shape shape, std::uint64_t n, std::uint64_t seed, const SamplerOptions &opts = {});

/// Orbit moments; n >= 2.
EstimatorSummary estimate_orbit(const SchmidtSpectrum &lambda, Shape shape, std::uint64_t n, std::uint64_t seed,
                                const SamplerOptions &opts = {});

/// Range of E_lin for a shape: [0, 1 - 1/min(d_A, d_B)].
double max_e_lin(Shape shape);

/// Binned conditional mean of M_lin given E_lin from Haar samples.
BinnedCurve conditional_curve(Shape shape, std::uint64_t n, int bins, std::uint64_t seed, const SamplerOptions &opts = {},
                              std::uint64_t min_occupancy = kDefaultMinOccupancy);

/// Empty grid over [0, max_e_lin] x [0, 1].
Histogram2D joint_grid(Shape shape, int bins_e, int bins_m);

/// Joint histogram of Haar samples; n >= 10^4.
Histogram2D joint_histogram(Shape shape, std::uint64_t n, int bins_e, int bins_m, std::uint64_t seed,
                            const SamplerOptions &opts = {});

struct GaussianReference {
    std::vector<double> grid_mass;     // product-Gaussian bin masses, normalized over the grid
    std::vector<double> support_mass;  // renormalized over bins with nonzero counts, zero elsewhere
    std::vector<double> support_log_mass;  // log of support_mass, finite even where support_mass underflows
};

/// Product Gaussian with the closed-form Haar means and variances of E_lin and M_lin.
/// Bin masses are the exact integrals of the density over each cell, evaluated in log space.
GaussianReference gaussian_reference(const Histogram2D &hist, Shape shape);

struct GaussianDiagnostic {
    unsigned n = 0;
    Shape shape;
    std::uint64_t samples = 0;
    double kl = 0;
    double l1 = 0;
    std::size_t occupied_bins = 0;
    std::string warning;
};

/// KL and L1 between the empirical joint histogram and the Gaussian reference, n_A = floor(n/2).
GaussianDiagnostic gaussian_diagnostic(unsigned n, std::uint64_t samples, int bins, std::uint64_t seed,
                                       const SamplerOptions &opts = {});

}  // namespace stabent

#endif
