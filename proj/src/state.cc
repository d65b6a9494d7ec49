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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stabent {

bool is_power_of_two(std::size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

unsigned Shape::qubits() const {
    return qubits_a() + qubits_b();
}
unsigned Shape::qubits_a() const {
    return static_cast<unsigned>(std::countr_zero(d_a));
}
unsigned Shape::qubits_b() const {
    return static_cast<unsigned>(std::countr_zero(d_b));
}

void Shape::validate() const {
    if (!is_power_of_two(d_a) || !is_power_of_two(d_b)) {
        throw std::invalid_argument(
            "Bipartition dimensions must be powers of two, got (" + std::to_string(d_a) + ", " +
            std::to_string(d_b) + ")");
    }
}

Shape Shape::from_qubits(unsigned n, unsigned n_a) {
    if (n_a > n || n > 30) {
        throw std::invalid_argument("Invalid qubit bipartition");
    }
    return Shape{std::size_t{1} << n_a, std::size_t{1} << (n - n_a)};
}

namespace {

double norm_sq(const Amplitudes &amps) {
    double s = 0;
    for (const auto &a : amps) {
        s += std::norm(a);
    }
    return s;
}

}  // namespace

PureState::PureState(Amplitudes amps, Shape shape) : amps_(std::move(amps)), shape_(shape) {
    shape_.validate();
    if (amps_.size() != shape_.dim()) {
        throw std::invalid_argument(
            "Amplitude count " + std::to_string(amps_.size()) + " does not match shape dimension " +
            std::to_string(shape_.dim()));
    }
    double n = norm_sq(amps_);
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw std::invalid_argument("State is not normalized (norm^2 = " + std::to_string(n) + ")");
    }
}

PureState::PureState(Amplitudes amps) : PureState(amps, Shape{1, amps.size()}) {
}

PureState PureState::with_shape(Shape shape) const {
    return PureState(amps_, shape);
}

Eigen::MatrixXcd PureState::matrix() const {
    Eigen::MatrixXcd m(shape_.d_a, shape_.d_b);
    for (std::size_t i = 0; i < shape_.d_a; i++) {
        for (std::size_t j = 0; j < shape_.d_b; j++) {
            m(i, j) = amps_[i * shape_.d_b + j];
        }
    }
    return m;
}

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> lambdas, double tol) : lambdas_(std::move(lambdas)) {
    if (lambdas_.empty()) {
        throw std::invalid_argument("Schmidt spectrum must be nonempty");
    }
    double total = 0;
    for (std::size_t i = 0; i < lambdas_.size(); i++) {
        if (!(lambdas_[i] >= 0)) {
            throw std::invalid_argument("Schmidt coefficients must be nonnegative");
        }
        if (i > 0 && lambdas_[i] > lambdas_[i - 1]) {
            throw std::invalid_argument("Schmidt coefficients must be in descending order");
        }
        total += lambdas_[i];
    }
    if (std::abs(total - 1.0) > tol) {
        throw std::invalid_argument("Schmidt coefficients must sum to 1 (got " + std::to_string(total) + ")");
    }
}

SchmidtSpectrum SchmidtSpectrum::normalized(std::vector<double> values, double tol) {
    double total = 0;
    for (double &v : values) {
        if (v < -tol || std::isnan(v)) {
            throw std::invalid_argument("Schmidt coefficient below zero: " + std::to_string(v));
        }
        v = std::max(v, 0.0);
        total += v;
    }
    if (std::abs(total - 1.0) > tol) {
        throw std::invalid_argument("Schmidt coefficients sum to " + std::to_string(total) + ", not 1");
    }
    for (double &v : values) {
        v /= total;
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return SchmidtSpectrum(std::move(values), 1e-12);
}

double SchmidtSpectrum::power_sum(int k) const {
    double s = 0;
    for (double l : lambdas_) {
        s += std::pow(l, k);
    }
    return s;
}

double SchmidtSpectrum::e_lin() const {
    return 1.0 - power_sum(2);
}

SchmidtSpectrum SchmidtSpectrum::product(std::size_t d_a) {
    std::vector<double> v(d_a, 0.0);
    v[0] = 1.0;
    return SchmidtSpectrum(std::move(v));
}

SchmidtSpectrum SchmidtSpectrum::flat(std::size_t d_a) {
    return SchmidtSpectrum(std::vector<double>(d_a, 1.0 / static_cast<double>(d_a)));
}

SchmidtSpectrum SchmidtSpectrum::random(std::size_t d_a, RngStream &rng) {
    std::vector<double> v(d_a);
    double total = 0;
    for (double &x : v) {
        x = -std::log1p(-rng.uniform());
        total += x;
    }
    for (double &x : v) {
        x /= total;
    }
    return normalized(std::move(v), 1e-9);
}

double Unitary::unitarity_residual() const {
    Eigen::MatrixXcd g = entries.adjoint() * entries - Eigen::MatrixXcd::Identity(entries.rows(), entries.cols());
    return g.cwiseAbs().maxCoeff();
}

PureState haar_state(Shape shape, RngStream &rng) {
    shape.validate();
    Amplitudes amps(shape.dim());
    double total = 0;
    for (auto &a : amps) {
        a = rng.complex_normal();
        total += std::norm(a);
    }
    double scale = 1.0 / std::sqrt(total);
    for (auto &a : amps) {
        a *= scale;
    }
    return PureState(std::move(amps), shape);
}

Unitary haar_unitary(std::size_t d, RngStream &rng) {
    if (d == 0) {
        throw std::invalid_argument("haar_unitary requires d >= 1");
    }
    Eigen::MatrixXcd g(d, d);
    for (std::size_t c = 0; c < d; c++) {
        for (std::size_t r = 0; r < d; r++) {
            g(r, c) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd &r = qr.matrixQR();
    for (std::size_t j = 0; j < d; j++) {
        Complex rjj = r(j, j);
        double mag = std::abs(rjj);
        Complex phase = mag > 0 ? rjj / mag : Complex(1.0);
        q.col(j) *= phase;
    }
    return Unitary{std::move(q)};
}

SchmidtDecomposition schmidt(const PureState &psi) {
    const Shape &s = psi.shape();
    if (s.d_a > s.d_b) {
        throw std::invalid_argument("schmidt requires d_A <= d_B");
    }
    Eigen::MatrixXcd m = psi.matrix();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) {
        throw std::runtime_error("Singular value decomposition failed");
    }
    Eigen::VectorXd sv = svd.singularValues();
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(s.d_a, s.d_b);
    std::vector<double> lambdas(s.d_a);
    for (std::size_t i = 0; i < s.d_a; i++) {
        d(i, i) = sv(i);
        lambdas[i] = sv(i) * sv(i);
    }
    Eigen::MatrixXcd u_b = svd.matrixV().conjugate();
    double residual = (m - svd.matrixU() * d * u_b.transpose()).cwiseAbs().maxCoeff();
    if (residual > 1e-9) {
        throw std::runtime_error("Schmidt reconstruction residual too large: " + std::to_string(residual));
    }
    return SchmidtDecomposition{SchmidtSpectrum::normalized(std::move(lambdas), 1e-9), svd.matrixU(), u_b};
}

PureState reference_state(const SchmidtSpectrum &lambda, Shape shape) {
    shape.validate();
    if (lambda.size() != shape.d_a || shape.d_a > shape.d_b) {
        throw std::invalid_argument("Spectrum length must equal d_A (and d_A <= d_B)");
    }
    Amplitudes amps(shape.dim());
    for (std::size_t i = 0; i < shape.d_a; i++) {
        amps[i * shape.d_b + i] = std::sqrt(lambda.lambdas()[i]);
    }
    return PureState(std::move(amps), shape);
}

PureState orbit_sample(const SchmidtSpectrum &lambda, Shape shape, RngStream &rng) {
    shape.validate();
    if (lambda.size() != shape.d_a || shape.d_a > shape.d_b) {
        throw std::invalid_argument("Spectrum length must equal d_A (and d_A <= d_B)");
    }
    Unitary ua = haar_unitary(shape.d_a, rng);
    Unitary ub = haar_unitary(shape.d_b, rng);
    Amplitudes amps(shape.dim());
    for (std::size_t k = 0; k < shape.d_a; k++) {
        double w = std::sqrt(lambda.lambdas()[k]);
        if (w == 0) {
            continue;
        }
        for (std::size_t i = 0; i < shape.d_a; i++) {
            Complex a = ua.entries(i, k) * w;
            Complex *row = amps.data() + i * shape.d_b;
            for (std::size_t j = 0; j < shape.d_b; j++) {
                row[j] += a * ub.entries(j, k);
            }
        }
    }
    // Rounding in the unitaries leaves the norm off by ~1e-15; restore it.
    double total = norm_sq(amps);
    double scale = 1.0 / std::sqrt(total);
    for (auto &a : amps) {
        a *= scale;
    }
    return PureState(std::move(amps), shape);
}

PureState apply_local(const PureState &psi, const Eigen::MatrixXcd &u_a, const Eigen::MatrixXcd &u_b) {
    const Shape &s = psi.shape();
    if (static_cast<std::size_t>(u_a.rows()) != s.d_a || static_cast<std::size_t>(u_b.rows()) != s.d_b) {
        throw std::invalid_argument("Local unitary dimensions do not match the bipartition");
    }
    Eigen::MatrixXcd m = u_a * psi.matrix() * u_b.transpose();
    Amplitudes amps(s.dim());
    for (std::size_t i = 0; i < s.d_a; i++) {
        for (std::size_t j = 0; j < s.d_b; j++) {
            amps[i * s.d_b + j] = m(i, j);
        }
    }
    double scale = 1.0 / std::sqrt(norm_sq(amps));
    for (auto &a : amps) {
        a *= scale;
    }
    return PureState(std::move(amps), s);
}

PureState apply_unitary(const Eigen::MatrixXcd &u, const PureState &psi) {
    if (static_cast<std::size_t>(u.rows()) != psi.dim() || u.rows() != u.cols()) {
        throw std::invalid_argument("Unitary dimension does not match state dimension");
    }
    Eigen::Map<const Eigen::VectorXcd> v(psi.amps().data(), static_cast<Eigen::Index>(psi.dim()));
    Eigen::VectorXcd out = u * v;
    Amplitudes amps(out.data(), out.data() + out.size());
    double scale = 1.0 / std::sqrt(norm_sq(amps));
    for (auto &a : amps) {
        a *= scale;
    }
    return PureState(std::move(amps), psi.shape());
}

PureState golden_state(unsigned n) {
    if (n < 1 || n > 20) {
        throw std::invalid_argument("golden_state requires 1 <= n <= 20");
    }
    double theta = std::acos(1.0 / std::sqrt(3.0));
    Complex g0(std::cos(theta / 2), 0.0);
    Complex g1 = std::polar(std::sin(theta / 2), std::numbers::pi / 4);
    std::size_t d = std::size_t{1} << n;
    Amplitudes amps(d);
    for (std::size_t i = 0; i < d; i++) {
        Complex a(1.0);
        for (unsigned q = 0; q < n; q++) {
            a *= ((i >> q) & 1) ? g1 : g0;
        }
        amps[i] = a;
    }
    return PureState(std::move(amps));
}

PureState tensor(const PureState &a, const PureState &b) {
    Amplitudes amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < b.dim(); j++) {
            amps[i * b.dim() + j] = a.amps()[i] * b.amps()[j];
        }
    }
    double scale = 1.0 / std::sqrt(norm_sq(amps));
    for (auto &x : amps) {
        x *= scale;
    }
    return PureState(std::move(amps), Shape{a.dim(), b.dim()});
}

namespace {

// Reduced density matrix on the smaller side; the nonzero spectra of both sides agree.
Eigen::MatrixXcd reduced_gram(const PureState &psi) {
    const Shape &s = psi.shape();
    const Complex *p = psi.amps().data();
    if (s.d_a <= s.d_b) {
        Eigen::MatrixXcd rho(s.d_a, s.d_a);
        for (std::size_t i = 0; i < s.d_a; i++) {
            for (std::size_t k = i; k < s.d_a; k++) {
                Complex acc = 0;
                for (std::size_t j = 0; j < s.d_b; j++) {
                    acc += p[i * s.d_b + j] * std::conj(p[k * s.d_b + j]);
                }
                rho(i, k) = acc;
                rho(k, i) = std::conj(acc);
            }
        }
        return rho;
    }
    Eigen::MatrixXcd rho(s.d_b, s.d_b);
    for (std::size_t j = 0; j < s.d_b; j++) {
        for (std::size_t l = j; l < s.d_b; l++) {
            Complex acc = 0;
            for (std::size_t i = 0; i < s.d_a; i++) {
                acc += p[i * s.d_b + j] * std::conj(p[i * s.d_b + l]);
            }
            rho(j, l) = acc;
            rho(l, j) = std::conj(acc);
        }
    }
    return rho;
}

}  // namespace

double e_lin(const PureState &psi) {
    Eigen::MatrixXcd rho = reduced_gram(psi);
    return 1.0 - rho.cwiseAbs2().sum();
}

double reduced_cube_trace(const PureState &psi) {
    Eigen::MatrixXcd rho = reduced_gram(psi);
    Eigen::MatrixXcd rho2 = rho * rho;
    return (rho2 * rho).trace().real();
}

double antiflatness(const PureState &psi) {
    Eigen::MatrixXcd rho = reduced_gram(psi);
    Eigen::MatrixXcd rho2 = rho * rho;
    double p2 = rho2.trace().real();
    double p3 = (rho2 * rho).trace().real();
    return p3 - p2 * p2;
}

double antiflatness(const SchmidtSpectrum &lambda) {
    double p2 = lambda.power_sum(2);
    return lambda.power_sum(3) - p2 * p2;
}

}  // namespace stabent
