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

#include "stabent/mc_engine.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "stabent/closed_forms.h"
#include "stabent/rng.h"

namespace stabent {

namespace {

using SampleVec = std::vector<JointSample>;

constexpr double kOrbitETolerance = 1e-9;

JointSample measure(const PureState &psi, const KernelOptions &kernel) {
    return {e_lin(psi), m_lin(psi, kernel)};
}

// Fills out[begin, end) with samples drawn by `draw` from stream (seed, chunk).
template <class Draw>
void fill_samples(SampleVec &out, std::uint64_t n, std::uint64_t seed, const SamplerOptions &opts, Draw draw) {
    out.assign(n, JointSample{});
    std::function<int(std::uint64_t, std::uint64_t, std::uint64_t)> work = [&](std::uint64_t c, std::uint64_t b,
                                                                                std::uint64_t e) {
        RngStream rng(seed, c);
        for (std::uint64_t i = b; i < e; i++) {
            out[i] = draw(rng);
        }
        return 0;
    };
    std::function<int(const int &, const int &)> merge = [](const int &, const int &) { return 0; };
    run_chunked<int>(n, opts.chunks, work, merge, 0);
}

template <class Draw>
MomentAccumulator accumulate(std::uint64_t n, std::uint64_t seed, const SamplerOptions &opts, Draw draw) {
    std::function<MomentAccumulator(std::uint64_t, std::uint64_t, std::uint64_t)> work =
        [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
            RngStream rng(seed, c);
            MomentAccumulator acc(n);
            for (std::uint64_t i = b; i < e; i++) {
                JointSample s = draw(rng);
                acc.add(i, s.e, s.m);
            }
            return acc;
        };
    std::function<MomentAccumulator(const MomentAccumulator &, const MomentAccumulator &)> merge =
        &MomentAccumulator::merge;
    return run_chunked<MomentAccumulator>(n, opts.chunks, work, merge, MomentAccumulator(n));
}

auto haar_draw(Shape shape, const KernelOptions &kernel) {
    return [shape, kernel](RngStream &rng) { return measure(haar_state(shape, rng), kernel); };
}

auto orbit_draw(const SchmidtSpectrum &lambda, Shape shape, const KernelOptions &kernel) {
    double e_target = lambda.e_lin();
    return [&lambda, shape, kernel, e_target](RngStream &rng) {
        JointSample s = measure(orbit_sample(lambda, shape, rng), kernel);
        if (std::abs(s.e - e_target) > kOrbitETolerance) {
            throw std::runtime_error("Orbit sample left the Schmidt orbit: E_lin = " + std::to_string(s.e) +
                                     ", expected " + std::to_string(e_target));
        }
        return s;
    };
}

void check_orbit_shape(const SchmidtSpectrum &lambda, Shape shape) {
    shape.validate();
    if (lambda.size() != std::min(shape.d_a, shape.d_b)) {
        throw std::invalid_argument("Spectrum length must equal min(d_A, d_B)");
    }
}

void check_kernel_cap(Shape shape, const KernelOptions &kernel) {
    shape.validate();
    if (shape.qubits() > kernel.qubit_cap) {
        throw std::invalid_argument("n = " + std::to_string(shape.qubits()) + " exceeds the qubit cap " +
                                    std::to_string(kernel.qubit_cap) + "; pass --cap-override to raise it");
    }
}

}  // namespace

SampleVec sample_haar(Shape shape, std::uint64_t n, std::uint64_t seed, const SamplerOptions &opts) {
    check_kernel_cap(shape, opts.kernel);
    SampleVec out;
    fill_samples(out, n, seed, opts, haar_draw(shape, opts.kernel));
    return out;
}

SampleVec sample_orbit(const SchmidtSpectrum &lambda, Shape shape, std::uint64_t n, std::uint64_t seed,
                       const SamplerOptions &opts) {
    check_orbit_shape(lambda, shape);
    check_kernel_cap(shape, opts.kernel);
    SampleVec out;
    fill_samples(out, n, seed, opts, orbit_draw(lambda, shape, opts.kernel));
    return out;
}

EstimatorSummary estimate_haar_joint(Shape shape, std::uint64_t n, std::uint64_t seed, const SamplerOptions &opts) {
    if (n < 1000) {
        throw std::invalid_argument("estimate_haar_joint needs at least 1000 samples");
    }
    check_kernel_cap(shape, opts.kernel);
    return EstimatorSummary::from(accumulate(n, seed, opts, haar_draw(shape, opts.kernel)));
}

EstimatorSummary estimate_orbit(const SchmidtSpectrum &lambda, Shape shape, std::uint64_t n, std::uint64_t seed,
                                const SamplerOptions &opts) {
    if (n < 2) {
        throw std::invalid_argument("estimate_orbit needs at least 2 samples");
    }
    check_orbit_shape(lambda, shape);
    check_kernel_cap(shape, opts.kernel);
    return EstimatorSummary::from(accumulate(n, seed, opts, orbit_draw(lambda, shape, opts.kernel)));
}

double max_e_lin(Shape shape) {
    return 1.0 - 1.0 / static_cast<double>(std::min(shape.d_a, shape.d_b));
}

BinnedCurve conditional_curve(Shape shape, std::uint64_t n, int bins, std::uint64_t seed, const SamplerOptions &opts,
                              std::uint64_t min_occupancy) {
    check_kernel_cap(shape, opts.kernel);
    if (std::min(shape.d_a, shape.d_b) < 2) {
        throw std::invalid_argument("conditional_curve needs an entangled bipartition");
    }
    ConditionalAccumulator empty(0.0, max_e_lin(shape), bins);
    auto draw = haar_draw(shape, opts.kernel);
    std::function<ConditionalAccumulator(std::uint64_t, std::uint64_t, std::uint64_t)> work =
        [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
            RngStream rng(seed, c);
            ConditionalAccumulator acc = empty;
            for (std::uint64_t i = b; i < e; i++) {
                JointSample s = draw(rng);
                acc.add(s.e, s.m);
            }
            return acc;
        };
    std::function<ConditionalAccumulator(const ConditionalAccumulator &, const ConditionalAccumulator &)> merge =
        &ConditionalAccumulator::merge;
    return BinnedCurve::from(run_chunked<ConditionalAccumulator>(n, opts.chunks, work, merge, empty), min_occupancy);
}

Histogram2D joint_grid(Shape shape, int bins_e, int bins_m) {
    shape.validate();
    if (std::min(shape.d_a, shape.d_b) < 2) {
        throw std::invalid_argument("joint histogram needs an entangled bipartition");
    }
    return Histogram2D(0.0, max_e_lin(shape), bins_e, 0.0, 1.0, bins_m);
}

Histogram2D joint_histogram(Shape shape, std::uint64_t n, int bins_e, int bins_m, std::uint64_t seed,
                            const SamplerOptions &opts) {
    if (n < 10000) {
        throw std::invalid_argument("joint_histogram needs at least 10^4 samples");
    }
    check_kernel_cap(shape, opts.kernel);
    Histogram2D empty = joint_grid(shape, bins_e, bins_m);
    auto draw = haar_draw(shape, opts.kernel);
    std::function<Histogram2D(std::uint64_t, std::uint64_t, std::uint64_t)> work = [&](std::uint64_t c,
                                                                                       std::uint64_t b,
                                                                                       std::uint64_t e) {
        RngStream rng(seed, c);
        Histogram2D h = empty;
        for (std::uint64_t i = b; i < e; i++) {
            JointSample s = draw(rng);
            h.add(s.e, s.m);
        }
        return h;
    };
    std::function<Histogram2D(const Histogram2D &, const Histogram2D &)> merge = &Histogram2D::merge;
    return run_chunked<Histogram2D>(n, opts.chunks, work, merge, empty);
}

namespace {

// log of the standard normal upper tail Q(z) = P(Z >= z).
double log_upper_tail(double z) {
    if (z < 30.0) {
        return std::log(0.5 * std::erfc(z / std::sqrt(2.0)));
    }
    // Asymptotic series; relative error below 1e-9 for z >= 30.
    double z2 = z * z;
    double series = 1.0 - 1.0 / z2 + 3.0 / (z2 * z2) - 15.0 / (z2 * z2 * z2);
    return -0.5 * z2 - std::log(z * std::sqrt(2.0 * M_PI)) + std::log(series);
}

// log of the normal mass of [lo, hi] with mean mu and standard deviation sigma.
double log_normal_mass(double lo, double hi, double mu, double sigma) {
    double a = (lo - mu) / sigma;
    double b = (hi - mu) / sigma;
    if (a < 0 && b > 0) {
        return std::log1p(-0.5 * std::erfc(b / std::sqrt(2.0)) - 0.5 * std::erfc(-a / std::sqrt(2.0)));
    }
    if (b <= 0) {
        std::swap(a, b);
        a = -a;
        b = -b;
    }
    double la = log_upper_tail(a);
    double lb = log_upper_tail(b);
    return la + std::log1p(-std::exp(lb - la));
}

double log_sum_exp(const std::vector<double> &xs) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double x : xs) {
        mx = std::max(mx, x);
    }
    double s = 0;
    for (double x : xs) {
        s += std::exp(x - mx);
    }
    return mx + std::log(s);
}

}  // namespace

GaussianReference gaussian_reference(const Histogram2D &hist, Shape shape) {
    shape.validate();
    auto d_a = static_cast<std::int64_t>(shape.d_a);
    auto d_b = static_cast<std::int64_t>(shape.d_b);
    auto d = d_a * d_b;
    double mu_e = to_double(mean_e_lin(d_a, d_b));
    double sd_e = std::sqrt(to_double(var_e_lin(d_a, d_b)));
    double mu_m = to_double(mean_m_lin(d));
    double sd_m = std::sqrt(to_double(var_m_lin(d)));
    std::vector<double> le(hist.bins_e);
    std::vector<double> lm(hist.bins_m);
    for (int i = 0; i < hist.bins_e; i++) {
        le[i] = log_normal_mass(hist.e_lo + i * hist.e_width(), hist.e_lo + (i + 1) * hist.e_width(), mu_e, sd_e);
    }
    for (int j = 0; j < hist.bins_m; j++) {
        lm[j] = log_normal_mass(hist.m_lo + j * hist.m_width(), hist.m_lo + (j + 1) * hist.m_width(), mu_m, sd_m);
    }
    std::size_t cells = hist.counts.size();
    std::vector<double> log_cell(cells);
    std::vector<double> log_support;
    for (int i = 0; i < hist.bins_e; i++) {
        for (int j = 0; j < hist.bins_m; j++) {
            std::size_t k = static_cast<std::size_t>(i) * hist.bins_m + j;
            log_cell[k] = le[i] + lm[j];
            if (hist.counts[k] > 0) {
                log_support.push_back(log_cell[k]);
            }
        }
    }
    if (log_support.empty()) {
        throw std::domain_error("Gaussian reference needs a nonempty histogram");
    }
    double log_grid_total = log_sum_exp(log_cell);
    double log_support_total = log_sum_exp(log_support);
    GaussianReference ref;
    ref.grid_mass.resize(cells);
    ref.support_mass.assign(cells, 0.0);
    ref.support_log_mass.assign(cells, -std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k < cells; k++) {
        ref.grid_mass[k] = std::exp(log_cell[k] - log_grid_total);
        if (hist.counts[k] > 0) {
            ref.support_log_mass[k] = log_cell[k] - log_support_total;
            ref.support_mass[k] = std::exp(ref.support_log_mass[k]);
        }
    }
    return ref;
}

GaussianDiagnostic gaussian_diagnostic(unsigned n, std::uint64_t samples, int bins, std::uint64_t seed,
                                       const SamplerOptions &opts) {
    if (n < 2) {
        throw std::invalid_argument("gaussian_diagnostic needs n >= 2");
    }
    GaussianDiagnostic out;
    out.n = n;
    out.shape = Shape::from_qubits(n, n / 2);
    out.samples = samples;
    Histogram2D hist = joint_histogram(out.shape, samples, bins, bins, seed, opts);
    GaussianReference ref = gaussian_reference(hist, out.shape);
    std::vector<double> p = hist.mass();
    out.kl = kl_divergence_log(p, ref.support_log_mass);
    out.l1 = l1_distance(p, ref.grid_mass);
    for (std::uint64_t c : hist.counts) {
        out.occupied_bins += c > 0 ? 1 : 0;
    }
    if (static_cast<double>(samples) < static_cast<double>(kDefaultMinOccupancy * out.occupied_bins)) {
        out.warning = "fewer than " + std::to_string(kDefaultMinOccupancy) +
                      " samples per occupied bin on average; KL and L1 are dominated by sampling noise";
    }
    return out;
}

}  // namespace stabent
