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

#ifndef STABENT_ESTIMATORS_H
#define STABENT_ESTIMATORS_H

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace stabent {

/// Streaming first and second moments of a pair (e, m), mergeable with Chan's update.
struct Moments {
    std::uint64_t count = 0;
    double mean_e = 0;
    double mean_m = 0;
    double m2_e = 0;
    double m2_m = 0;
    double cross = 0;

    void add(double e, double m);
    static Moments merge(const Moments &a, const Moments &b);

    /// Unbiased (n - 1) estimators; NaN below two samples.
    double var_e() const;
    double var_m() const;
    double cov() const;
};

constexpr int kBatchCount = 32;

/// Accumulator for one estimation run: global moments plus fixed batches for batch-mean errors.
///
/// Sample i of N belongs to batch floor(i * kBatchCount / N), so the batch layout does not
/// depend on how samples are chunked or scheduled.
struct MomentAccumulator {
    std::uint64_t total_samples = 0;
    Moments all;
    std::array<Moments, kBatchCount> batches{};

    explicit MomentAccumulator(std::uint64_t total = 0) : total_samples(total) {}

    void add(std::uint64_t index, double e, double m);
    static MomentAccumulator merge(const MomentAccumulator &a, const MomentAccumulator &b);
};

struct EstimatorSummary {
    std::uint64_t count = 0;
    double mean_e = 0;
    double mean_m = 0;
    double var_e = 0;
    double var_m = 0;
    double cov = 0;
    double se_mean_e = 0;
    double se_mean_m = 0;
    double se_var_e = 0;
    double se_var_m = 0;
    double se_cov = 0;
    Moments moments;

    static EstimatorSummary from(const MomentAccumulator &acc);
};

/// Uniform 2D histogram over [e_lo, e_hi] x [m_lo, m_hi].
struct Histogram2D {
    double e_lo = 0;
    double e_hi = 1;
    double m_lo = 0;
    double m_hi = 1;
    int bins_e = 0;
    int bins_m = 0;
    std::vector<std::uint64_t> counts;  // row-major, e index first
    std::uint64_t total = 0;

    Histogram2D() = default;
    Histogram2D(double e_lo, double e_hi, int bins_e, double m_lo, double m_hi, int bins_m);

    /// Values up to 1e-9 outside the range are clamped in; anything further is an error.
    void add(double e, double m);
    static Histogram2D merge(const Histogram2D &a, const Histogram2D &b);

    std::uint64_t count(int ie, int im) const {
        return counts[static_cast<std::size_t>(ie) * bins_m + im];
    }
    double e_width() const {
        return (e_hi - e_lo) / bins_e;
    }
    double m_width() const {
        return (m_hi - m_lo) / bins_m;
    }
    double e_center(int ie) const {
        return e_lo + (ie + 0.5) * e_width();
    }
    double m_center(int im) const {
        return m_lo + (im + 0.5) * m_width();
    }
    bool same_grid(const Histogram2D &other) const;

    /// Per-bin probability mass, summing to one.
    std::vector<double> mass() const;
    /// Per-bin density mass / (bin area).
    std::vector<double> density() const;
};

/// Per-bin moments of m conditioned on e lying in each of `bins` uniform bins.
struct ConditionalAccumulator {
    double e_lo = 0;
    double e_hi = 1;
    std::vector<Moments> per_bin;

    ConditionalAccumulator() = default;
    ConditionalAccumulator(double e_lo, double e_hi, int bins);
    void add(double e, double m);
    static ConditionalAccumulator merge(const ConditionalAccumulator &a, const ConditionalAccumulator &b);
};

constexpr std::uint64_t kDefaultMinOccupancy = 50;

struct BinnedCurve {
    std::vector<double> e_bin_centers;
    std::vector<double> e_bin_edges;        // bins + 1 entries
    std::vector<double> conditional_means;  // NaN when under-occupied
    std::vector<double> conditional_se;     // NaN when under-occupied
    std::vector<std::uint64_t> bin_counts;
    std::uint64_t min_occupancy = kDefaultMinOccupancy;

    bool occupied(std::size_t i) const {
        return bin_counts[i] >= min_occupancy;
    }
    std::size_t occupied_count() const;

    static BinnedCurve from(const ConditionalAccumulator &acc, std::uint64_t min_occupancy = kDefaultMinOccupancy);
};

/// KL(p || q) over bins with p > 0, with q renormalized on that support.
double kl_divergence(const std::vector<double> &p, const std::vector<double> &q);
/// Same as kl_divergence with q given as log masses, for references whose tails underflow.
double kl_divergence_log(const std::vector<double> &p, const std::vector<double> &log_q);
/// Sum of |p - q| over all bins.
double l1_distance(const std::vector<double> &p, const std::vector<double> &q);

/// Fraction of samples with |x - center| >= eps.
double tail_fraction(const std::vector<double> &samples, double center, double eps);

struct ChunkPolicy {
    std::uint64_t chunk_size = 4096;
    unsigned workers = 0;  // 0 selects the hardware concurrency
};

unsigned resolve_workers(unsigned requested);

/// Runs `work(chunk_index, begin, end)` over fixed-size chunks of [0, n) and reduces the results with
/// a fixed binary tree. The output depends only on n and the chunk size, never on the worker count.
template <class Acc>
Acc run_chunked(std::uint64_t n, const ChunkPolicy &policy, const std::function<Acc(std::uint64_t, std::uint64_t, std::uint64_t)> &work,
                const std::function<Acc(const Acc &, const Acc &)> &merge, const Acc &empty) {
    std::uint64_t chunk = std::max<std::uint64_t>(policy.chunk_size, 1);
    std::uint64_t num_chunks = (n + chunk - 1) / chunk;
    if (num_chunks == 0) {
        return empty;
    }
    std::vector<Acc> parts(num_chunks, empty);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        while (true) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= num_chunks) {
                return;
            }
            try {
                parts[c] = work(c, c * chunk, std::min(n, (c + 1) * chunk));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(num_chunks);
                return;
            }
        }
    };
    unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(policy.workers), num_chunks));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    for (std::size_t width = 1; width < parts.size(); width *= 2) {
        for (std::size_t i = 0; i + width < parts.size(); i += 2 * width) {
            parts[i] = merge(parts[i], parts[i + width]);
        }
    }
    return parts[0];
}

}  // namespace stabent

#endif
