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

#include "stabent/pauli_kernel.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>
#include <vector>

namespace stabent {

namespace {

void check_normalized(std::span<const Complex> amps) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw std::invalid_argument("State is not normalized (norm^2 = " + std::to_string(total) + ")");
    }
}

// Neumaier compensated accumulator.
struct CompensatedSum {
    double sum = 0;
    double comp = 0;

    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    double value() const {
        return sum + comp;
    }
};

void walsh_hadamard(double *v, std::size_t len) {
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t i = 0; i < len; i += h << 1) {
            for (std::size_t j = i; j < i + h; j++) {
                double a = v[j];
                double b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

void check_cap(unsigned n, const KernelOptions &opts) {
    if (n > opts.qubit_cap) {
        throw std::invalid_argument(
            "Stabilizer purity requested for " + std::to_string(n) + " qubits, above the cap of " +
            std::to_string(opts.qubit_cap) + "; raise it with --cap-override");
    }
}

}  // namespace

double pauli_expectation(const PauliString &p, std::span<const Complex> amps) {
    std::size_t d = amps.size();
    if (!is_power_of_two(d) || (std::size_t{1} << p.n) != d) {
        throw std::invalid_argument(
            "Pauli string acts on " + std::to_string(p.n) + " qubits but state has dimension " + std::to_string(d));
    }
    check_normalized(amps);
    // P|j> = i^{|x&z|} (-1)^{|j&z|} |j^x>
    Complex acc = 0;
    for (std::size_t j = 0; j < d; j++) {
        Complex t = std::conj(amps[j ^ p.x_mask]) * amps[j];
        acc += (std::popcount(j & p.z_mask) & 1) ? -t : t;
    }
    static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    acc *= kIPow[p.y_count() & 3];
    if (std::abs(acc.imag()) > 1e-10) {
        throw std::logic_error("Hermitian Pauli expectation has an imaginary part");
    }
    return acc.real();
}

double pauli_expectation(const PauliString &p, const PureState &psi) {
    return pauli_expectation(p, std::span<const Complex>(psi.amps()));
}

PauliSpectrumSummary pauli_spectrum_partial(std::span<const Complex> amps, std::uint64_t x_begin, std::uint64_t x_end) {
    std::size_t d = amps.size();
    if (!is_power_of_two(d)) {
        throw std::invalid_argument("State dimension must be a power of two");
    }
    x_end = std::min<std::uint64_t>(x_end, d);
    PauliSpectrumSummary out;
    out.d = d;
    CompensatedSum sq;
    CompensatedSum quartic;
    std::vector<double> re(d);
    std::vector<double> im(d / 2 > 0 ? d / 2 : 1);
    for (std::uint64_t x = x_begin; x < x_end; x++) {
        if (x == 0) {
            // Diagonal strings: <Z^z> is the transform of the probabilities.
            for (std::size_t j = 0; j < d; j++) {
                re[j] = std::norm(amps[j]);
            }
            walsh_hadamard(re.data(), d);
            for (std::size_t z = 0; z < d; z++) {
                double v2 = re[z] * re[z];
                sq.add(v2);
                quartic.add(v2 * v2);
            }
            continue;
        }
        // Pair j with j^x via the top bit h of x; the compact index drops bit h.
        // Given z, the pair sum is 2 Re(c) or 2i Im(c) times a sign, depending on |x&z| parity,
        // so each compact z contributes R^2 + I^2 over the two values of z_h.
        unsigned h = 63u - static_cast<unsigned>(std::countl_zero(x));
        std::size_t low_mask = (std::size_t{1} << h) - 1;
        std::size_t half = d / 2;
        for (std::size_t k = 0; k < half; k++) {
            std::size_t j = ((k & ~low_mask) << 1) | (k & low_mask);
            Complex c = std::conj(amps[j ^ x]) * amps[j];
            re[k] = 2 * c.real();
            im[k] = 2 * c.imag();
        }
        walsh_hadamard(re.data(), half);
        walsh_hadamard(im.data(), half);
        for (std::size_t k = 0; k < half; k++) {
            double r2 = re[k] * re[k];
            double i2 = im[k] * im[k];
            sq.add(r2 + i2);
            quartic.add(r2 * r2 + i2 * i2);
        }
    }
    out.sum_sq = sq.value();
    out.sum_quartic = quartic.value();
    return out;
}

PauliSpectrumSummary merge(const PauliSpectrumSummary &a, const PauliSpectrumSummary &b) {
    if (a.d != 0 && b.d != 0 && a.d != b.d) {
        throw std::invalid_argument("Cannot merge spectra of different dimensions");
    }
    return PauliSpectrumSummary{a.d != 0 ? a.d : b.d, a.sum_sq + b.sum_sq, a.sum_quartic + b.sum_quartic};
}

PauliSpectrumSummary pauli_spectrum(const PureState &psi, const KernelOptions &opts) {
    check_cap(psi.qubits(), opts);
    return pauli_spectrum_partial(psi.amps(), 0, psi.dim());
}

PauliSpectrumSummary pauli_spectrum_bruteforce(const PureState &psi) {
    unsigned n = psi.qubits();
    if (n > 8) {
        throw std::invalid_argument("Brute-force Pauli spectrum is limited to 8 qubits");
    }
    std::size_t d = psi.dim();
    PauliSpectrumSummary out{d, 0, 0};
    CompensatedSum sq;
    CompensatedSum quartic;
    for (std::uint64_t x = 0; x < d; x++) {
        for (std::uint64_t z = 0; z < d; z++) {
            double v = pauli_expectation(PauliString(n, x, z), psi);
            sq.add(v * v);
            quartic.add(v * v * v * v);
        }
    }
    out.sum_sq = sq.value();
    out.sum_quartic = quartic.value();
    return out;
}

double stabilizer_purity(const PureState &psi, const KernelOptions &opts) {
    PauliSpectrumSummary s = pauli_spectrum(psi, opts);
    return s.sum_quartic / static_cast<double>(s.d);
}

double m_lin(const PureState &psi, const KernelOptions &opts) {
    return 1.0 - stabilizer_purity(psi, opts);
}

double m2(const PureState &psi, LogBase base, const KernelOptions &opts) {
    double sp = stabilizer_purity(psi, opts);
    double v = base == LogBase::two ? -std::log2(sp) : -std::log(sp);
    return v == 0 ? 0.0 : v;  // avoid -0
}

BigInt pauli_power_trace_sum_closed(unsigned n, unsigned m, unsigned k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("pauli_power_trace_sum_closed requires n >= 1 and k >= 1");
    }
    long base_const;
    long sign_coef;
    long cos_coef;
    switch (m) {
        case 2:
            base_const = 14, sign_coef = 6, cos_coef = 12;
            break;
        case 3:
            base_const = 50, sign_coef = 30, cos_coef = 48;
            break;
        case 4:
            base_const = 164, sign_coef = 108, cos_coef = 240;
            break;
        default:
            throw std::invalid_argument("Number of strings in the product must be 2, 3 or 4");
    }
    long s = (k % 2 == 0) ? 1 : -1;
    long c = (k % 4 == 0) ? 1 : (k % 4 == 2 ? -1 : 0);
    BigInt per_qubit = base_const + sign_coef * s + cos_coef * c;
    return boost::multiprecision::pow(per_qubit, n);
}

BigInt pauli_power_trace_sum_bruteforce(unsigned n, unsigned m, unsigned k) {
    if (n < 1 || n > 3 || m < 2 || m > 4 || k < 1 || k > 8 || 2 * n * m > 16) {
        throw std::invalid_argument("Brute-force trace sum outside its feasibility budget (n <= 3, k <= 8, 4^(nm) <= 65536)");
    }
    using Mat = Eigen::MatrixXcd;
    const Complex I(0, 1);
    Mat single[4];
    single[0] = Mat::Identity(2, 2);
    single[1] = Mat(2, 2);
    single[1] << 0, 1, 1, 0;
    single[2] = Mat(2, 2);
    single[2] << 0, -I, I, 0;
    single[3] = Mat(2, 2);
    single[3] << 1, 0, 0, -1;
    std::size_t count = std::size_t{1} << (2 * n);
    std::vector<Mat> strings(count);
    for (std::size_t idx = 0; idx < count; idx++) {
        Mat acc = Mat::Identity(1, 1);
        for (unsigned q = 0; q < n; q++) {
            acc = Eigen::kroneckerProduct(acc, single[(idx >> (2 * q)) & 3]).eval();
        }
        strings[idx] = acc;
    }
    std::size_t tuples = std::size_t{1} << (2 * n * m);
    Complex total = 0;
    for (std::size_t t = 0; t < tuples; t++) {
        Mat prod = strings[t & (count - 1)];
        for (unsigned r = 1; r < m; r++) {
            prod = prod * strings[(t >> (2 * n * r)) & (count - 1)];
        }
        Mat power = prod;
        for (unsigned r = 1; r < k; r++) {
            power = power * prod;
        }
        total += power.trace();
    }
    double rounded = std::round(total.real());
    if (std::abs(total.imag()) > 1e-9 || std::abs(total.real() - rounded) > 1e-9) {
        throw std::logic_error("Brute-force trace sum is not an integer");
    }
    return BigInt(static_cast<long long>(rounded));
}

}  // namespace stabent
