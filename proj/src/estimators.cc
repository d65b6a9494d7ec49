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

#include "stabent/estimators.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace stabent {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRangeSlack = 1e-9;

int bin_index(double v, double lo, double hi, int bins, const char *axis) {
    if (!(v >= lo - kRangeSlack && v <= hi + kRangeSlack)) {
        throw std::out_of_range(std::string("Histogram value outside the ") + axis + " range");
    }
    int i = static_cast<int>(std::floor((v - lo) / (hi - lo) * bins));
    return std::clamp(i, 0, bins - 1);
}

double sample_sd(const std::vector<double> &xs) {
    double mean = 0;
    for (double x : xs) {
        mean += x;
    }
    mean /= static_cast<double>(xs.size());
    double ss = 0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

void Moments::add(double e, double m) {
    count++;
    double n = static_cast<double>(count);
    double de = e - mean_e;
    double dm = m - mean_m;
    mean_e += de / n;
    mean_m += dm / n;
    m2_e += de * (e - mean_e);
    m2_m += dm * (m - mean_m);
    cross += de * (m - mean_m);
}

Moments Moments::merge(const Moments &a, const Moments &b) {
    if (a.count == 0) {
        return b;
    }
    if (b.count == 0) {
        return a;
    }
    Moments out;
    out.count = a.count + b.count;
    double na = static_cast<double>(a.count);
    double nb = static_cast<double>(b.count);
    double n = static_cast<double>(out.count);
    double de = b.mean_e - a.mean_e;
    double dm = b.mean_m - a.mean_m;
    out.mean_e = (na * a.mean_e + nb * b.mean_e) / n;
    out.mean_m = (na * a.mean_m + nb * b.mean_m) / n;
    out.m2_e = a.m2_e + b.m2_e + de * de * na * nb / n;
    out.m2_m = a.m2_m + b.m2_m + dm * dm * na * nb / n;
    out.cross = a.cross + b.cross + de * dm * na * nb / n;
    return out;
}

double Moments::var_e() const {
    return count < 2 ? kNaN : m2_e / static_cast<double>(count - 1);
}

double Moments::var_m() const {
    return count < 2 ? kNaN : m2_m / static_cast<double>(count - 1);
}

double Moments::cov() const {
    return count < 2 ? kNaN : cross / static_cast<double>(count - 1);
}

void MomentAccumulator::add(std::uint64_t index, double e, double m) {
    all.add(e, m);
    std::uint64_t b = total_samples == 0 ? 0 : index * kBatchCount / total_samples;
    batches[std::min<std::uint64_t>(b, kBatchCount - 1)].add(e, m);
}

MomentAccumulator MomentAccumulator::merge(const MomentAccumulator &a, const MomentAccumulator &b) {
    MomentAccumulator out(std::max(a.total_samples, b.total_samples));
    out.all = Moments::merge(a.all, b.all);
    for (int i = 0; i < kBatchCount; i++) {
        out.batches[i] = Moments::merge(a.batches[i], b.batches[i]);
    }
    return out;
}

EstimatorSummary EstimatorSummary::from(const MomentAccumulator &acc) {
    EstimatorSummary s;
    const Moments &m = acc.all;
    s.moments = m;
    s.count = m.count;
    s.mean_e = m.mean_e;
    s.mean_m = m.mean_m;
    s.var_e = m.var_e();
    s.var_m = m.var_m();
    s.cov = m.cov();
    double n = static_cast<double>(m.count);
    s.se_mean_e = std::sqrt(s.var_e / n);
    s.se_mean_m = std::sqrt(s.var_m / n);
    std::vector<double> ve;
    std::vector<double> vm;
    std::vector<double> cv;
    for (const Moments &b : acc.batches) {
        if (b.count >= 2) {
            ve.push_back(b.var_e());
            vm.push_back(b.var_m());
            cv.push_back(b.cov());
        }
    }
    if (ve.size() >= 2) {
        double k = std::sqrt(static_cast<double>(ve.size()));
        s.se_var_e = sample_sd(ve) / k;
        s.se_var_m = sample_sd(vm) / k;
        s.se_cov = sample_sd(cv) / k;
    } else {
        s.se_var_e = s.se_var_m = s.se_cov = kNaN;
    }
    return s;
}

Histogram2D::Histogram2D(double e_lo, double e_hi, int bins_e, double m_lo, double m_hi, int bins_m)
    : e_lo(e_lo), e_hi(e_hi), m_lo(m_lo), m_hi(m_hi), bins_e(bins_e), bins_m(bins_m) {
    if (bins_e < 1 || bins_m < 1 || !(e_hi > e_lo) || !(m_hi > m_lo)) {
        throw std::invalid_argument("Histogram needs positive bin counts and nonempty ranges");
    }
    counts.assign(static_cast<std::size_t>(bins_e) * bins_m, 0);
}

void Histogram2D::add(double e, double m) {
    int ie = bin_index(e, e_lo, e_hi, bins_e, "e");
    int im = bin_index(m, m_lo, m_hi, bins_m, "m");
    counts[static_cast<std::size_t>(ie) * bins_m + im]++;
    total++;
}

bool Histogram2D::same_grid(const Histogram2D &o) const {
    return e_lo == o.e_lo && e_hi == o.e_hi && m_lo == o.m_lo && m_hi == o.m_hi && bins_e == o.bins_e &&
           bins_m == o.bins_m;
}

Histogram2D Histogram2D::merge(const Histogram2D &a, const Histogram2D &b) {
    if (!a.same_grid(b)) {
        throw std::invalid_argument("Histogram grids differ");
    }
    Histogram2D out = a;
    for (std::size_t i = 0; i < out.counts.size(); i++) {
        out.counts[i] += b.counts[i];
    }
    out.total += b.total;
    return out;
}

std::vector<double> Histogram2D::mass() const {
    if (total == 0) {
        throw std::logic_error("Empty histogram has no mass");
    }
    std::vector<double> out(counts.size());
    for (std::size_t i = 0; i < counts.size(); i++) {
        out[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return out;
}

std::vector<double> Histogram2D::density() const {
    std::vector<double> out = mass();
    double area = e_width() * m_width();
    for (double &v : out) {
        v /= area;
    }
    return out;
}

ConditionalAccumulator::ConditionalAccumulator(double e_lo, double e_hi, int bins) : e_lo(e_lo), e_hi(e_hi) {
    if (bins < 1 || !(e_hi > e_lo)) {
        throw std::invalid_argument("Conditional curve needs bins >= 1 and a nonempty range");
    }
    per_bin.resize(bins);
}

void ConditionalAccumulator::add(double e, double m) {
    int bins = static_cast<int>(per_bin.size());
    per_bin[bin_index(e, e_lo, e_hi, bins, "e")].add(e, m);
}

ConditionalAccumulator ConditionalAccumulator::merge(const ConditionalAccumulator &a, const ConditionalAccumulator &b) {
    if (a.per_bin.size() != b.per_bin.size() || a.e_lo != b.e_lo || a.e_hi != b.e_hi) {
        throw std::invalid_argument("Conditional grids differ");
    }
    ConditionalAccumulator out = a;
    for (std::size_t i = 0; i < out.per_bin.size(); i++) {
        out.per_bin[i] = Moments::merge(a.per_bin[i], b.per_bin[i]);
    }
    return out;
}

std::size_t BinnedCurve::occupied_count() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < bin_counts.size(); i++) {
        k += occupied(i) ? 1 : 0;
    }
    return k;
}

BinnedCurve BinnedCurve::from(const ConditionalAccumulator &acc, std::uint64_t min_occupancy) {
    BinnedCurve c;
    c.min_occupancy = min_occupancy;
    std::size_t bins = acc.per_bin.size();
    double width = (acc.e_hi - acc.e_lo) / static_cast<double>(bins);
    for (std::size_t i = 0; i <= bins; i++) {
        c.e_bin_edges.push_back(acc.e_lo + width * static_cast<double>(i));
    }
    for (std::size_t i = 0; i < bins; i++) {
        const Moments &m = acc.per_bin[i];
        c.e_bin_centers.push_back(acc.e_lo + width * (static_cast<double>(i) + 0.5));
        c.bin_counts.push_back(m.count);
        if (m.count >= min_occupancy && m.count >= 2) {
            c.conditional_means.push_back(m.mean_m);
            c.conditional_se.push_back(std::sqrt(m.var_m() / static_cast<double>(m.count)));
        } else {
            c.conditional_means.push_back(kNaN);
            c.conditional_se.push_back(kNaN);
        }
    }
    return c;
}

double kl_divergence(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("kl_divergence: grids differ");
    }
    double q_support = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        if (p[i] > 0) {
            q_support += q[i];
        }
    }
    if (!(q_support > 0)) {
        throw std::domain_error("kl_divergence: reference has no mass on the support of p");
    }
    double kl = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        if (p[i] > 0) {
            double qi = q[i] / q_support;
            if (!(qi > 0)) {
                return std::numeric_limits<double>::infinity();
            }
            kl += p[i] * std::log(p[i] / qi);
        }
    }
    return std::max(kl, 0.0);
}

double kl_divergence_log(const std::vector<double> &p, const std::vector<double> &log_q) {
    if (p.size() != log_q.size()) {
        throw std::invalid_argument("kl_divergence: grids differ");
    }
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); i++) {
        if (p[i] > 0) {
            mx = std::max(mx, log_q[i]);
        }
    }
    if (!std::isfinite(mx)) {
        throw std::domain_error("kl_divergence: reference has no mass on the support of p");
    }
    double z = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        if (p[i] > 0) {
            z += std::exp(log_q[i] - mx);
        }
    }
    double log_z = mx + std::log(z);
    double kl = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        if (p[i] > 0) {
            kl += p[i] * (std::log(p[i]) - (log_q[i] - log_z));
        }
    }
    return std::max(kl, 0.0);
}

double l1_distance(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("l1_distance: grids differ");
    }
    double s = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        s += std::abs(p[i] - q[i]);
    }
    return s;
}

double tail_fraction(const std::vector<double> &samples, double center, double eps) {
    if (!(eps > 0)) {
        throw std::invalid_argument("tail_fraction needs eps > 0");
    }
    if (samples.empty()) {
        return 0.0;
    }
    std::size_t k = 0;
    for (double x : samples) {
        k += std::abs(x - center) >= eps ? 1 : 0;
    }
    return static_cast<double>(k) / static_cast<double>(samples.size());
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace stabent
