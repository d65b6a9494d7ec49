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

#include "stabent/moment_sums.h"

#include <bit>
#include <map>

#include "stabent/pauli_words.h"
#include "stabent/state.h"

namespace stabent {

namespace {

struct Monomial {
    std::int64_t coef;
    unsigned pow_a;
    unsigned pow_b;
};

CycleType type_of(std::vector<int> parts, int k) {
    int total = 0;
    for (int p : parts) {
        total += p;
    }
    while (total < k) {
        parts.push_back(1);
        total++;
    }
    return CycleType{parts};
}

// Per-class totals of sum_{P,P'} Tr[T_pi (P^{x4} x P'^{x4})] as polynomials in d.
const std::map<CycleType, std::vector<Monomial>> &variance_class_table() {
    static const std::map<CycleType, std::vector<Monomial>> table = [] {
        std::map<CycleType, std::vector<Monomial>> t;
        auto add = [&](std::vector<int> parts, std::vector<Monomial> poly) { t[type_of(parts, 8)] = poly; };
        add({}, {{1, 8, 0}});
        add({2}, {{28, 7, 0}});
        add({3}, {{112, 6, 0}});
        add({4}, {{408, 5, 0}, {12, 7, 0}});
        add({5}, {{1152, 4, 0}, {192, 6, 0}});
        add({6}, {{1920, 3, 0}, {1440, 5, 0}});
        add({7}, {{5760, 4, 0}});
        add({8}, {{2304, 3, 0}, {2736, 5, 0}});
        add({2, 2}, {{204, 6, 0}, {6, 8, 0}});
        add({3, 2}, {{1024, 5, 0}, {96, 7, 0}});
        add({4, 2}, {{2016, 4, 0}, {504, 6, 0}});
        add({2, 2, 2}, {{384, 5, 0}, {36, 7, 0}});
        add({3, 3}, {{832, 4, 0}, {288, 6, 0}});
        add({3, 2, 2}, {{336, 6, 0}, {1344, 4, 0}});
        add({4, 3}, {{1824, 5, 0}, {1536, 3, 0}});
        add({5, 2}, {{2304, 3, 0}, {1728, 5, 0}});
        add({2, 2, 2, 2}, {{96, 6, 0}, {9, 8, 0}});
        add({4, 2, 2}, {{180, 7, 0}, {1080, 5, 0}});
        add({3, 3, 2}, {{640, 3, 0}, {480, 5, 0}});
        add({6, 2}, {{2496, 4, 0}, {864, 6, 0}});
        add({5, 3}, {{2688, 4, 0}});
        add({4, 4}, {{864, 4, 0}, {396, 6, 0}});
        return t;
    }();
    return table;
}

// Per-class totals of F_A(pi) F_B(pi) as polynomials in (d_A, d_B).
const std::map<CycleType, std::vector<Monomial>> &covariance_class_table() {
    static const std::map<CycleType, std::vector<Monomial>> table = [] {
        std::map<CycleType, std::vector<Monomial>> t;
        auto add = [&](std::vector<int> parts, std::vector<Monomial> poly) { t[type_of(parts, 6)] = poly; };
        add({}, {{1, 6, 6}});
        add({2}, {{1, 7, 5}, {14, 5, 5}});
        add({3}, {{8, 6, 4}, {32, 4, 4}});
        add({4}, {{6, 5, 5}, {36, 5, 3}, {48, 3, 3}});
        add({5}, {{48, 4, 4}, {96, 4, 2}});
        add({6}, {{72, 5, 3}, {48, 3, 3}});
        add({2, 2}, {{3, 6, 6}, {6, 6, 4}, {36, 4, 4}});
        add({3, 2}, {{24, 5, 5}, {32, 5, 3}, {64, 3, 3}});
        add({4, 2}, {{30, 6, 4}, {12, 4, 4}, {48, 4, 2}});
        add({2, 2, 2}, {{3, 7, 5}, {12, 5, 3}});
        add({3, 3}, {{24, 4, 4}, {16, 4, 2}});
        return t;
    }();
    return table;
}

BigInt eval(const std::vector<Monomial> &poly, std::int64_t a, std::int64_t b) {
    BigInt out = 0;
    for (const Monomial &m : poly) {
        out += BigInt(m.coef) * boost::multiprecision::pow(BigInt(a), m.pow_a) *
               boost::multiprecision::pow(BigInt(b), m.pow_b);
    }
    return out;
}

unsigned qubits_of(std::int64_t d, const char *what) {
    if (d < 2 || !is_power_of_two(static_cast<std::size_t>(d))) {
        throw std::invalid_argument(std::string(what) + " must be a power of two >= 2");
    }
    return static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(d)));
}

BigInt real_part(const GaussianInt &g, const std::string &context) {
    if (g.im != 0) {
        throw VerificationError("Pauli sum has a nonzero imaginary part in " + context);
    }
    return g.re;
}

}  // namespace

Rational variance_sum_target(std::int64_t d) {
    BigInt b(d);
    return make_rational(16 * (b * b + 15 * b + 68), (b + 3) * (b + 5) * (b + 6) * (b + 7));
}

VarianceSumResult verify_variance_sum(std::int64_t d) {
    unsigned n = qubits_of(d, "Dimension");
    if (n > 3) {
        throw std::invalid_argument("verify_variance_sum supports d <= 8");
    }
    const std::vector<int> labels = {0, 0, 0, 0, 1, 1, 1, 1};
    std::map<CycleType, BigInt> per_class;
    VarianceSumResult r;
    r.d = d;
    r.enumerated_sum = 0;
    for (const Permutation &pi : enumerate_sym(8)) {
        BigInt v = real_part(pauli_label_sum(pi, labels, 2, n), pi.str());
        per_class[pi.cycle_type()] += v;
        r.enumerated_sum += v;
    }
    r.class_grouped_sum = 0;
    for (const auto &[type, poly] : variance_class_table()) {
        BigInt tab = eval(poly, d, 1);
        r.class_grouped_sum += tab;
        BigInt got = per_class[type];
        r.classes.push_back(ClassDiagnostic{type, got, tab, got == tab});
    }
    BigInt denom = BigInt(d) * d * rising_factorial(static_cast<std::uint64_t>(d), 8);
    r.value = make_rational(r.enumerated_sum, denom);
    r.target = variance_sum_target(d);
    Rational mean_term = make_rational(4, d + 3);
    r.variance = r.value - mean_term * mean_term;
    Rational grouped = make_rational(r.class_grouped_sum, denom);
    if (r.enumerated_sum != r.class_grouped_sum || r.value != r.target) {
        throw VerificationError("Variance sum mismatch at d=" + std::to_string(d) + ": enumerated " +
                                to_string(r.value) + ", class-grouped " + to_string(grouped) + ", target " +
                                to_string(r.target));
    }
    return r;
}

BigInt variance_sum_explicit(std::int64_t d) {
    unsigned n = qubits_of(d, "Dimension");
    if (n > 2) {
        throw std::invalid_argument("variance_sum_explicit supports d <= 4");
    }
    const std::vector<int> labels = {0, 0, 0, 0, 1, 1, 1, 1};
    BigInt total = 0;
    for (const Permutation &pi : enumerate_sym(8)) {
        total += real_part(pauli_label_sum_explicit(pi, labels, 2, n), pi.str());
    }
    return total;
}

CovarianceSumResult verify_covariance_sum(std::int64_t d_a, std::int64_t d_b) {
    unsigned n_a = qubits_of(d_a, "d_A");
    unsigned n_b = qubits_of(d_b, "d_B");
    if (d_a > d_b || n_a > 2 || n_b > 3) {
        throw std::invalid_argument("verify_covariance_sum supports d_A <= d_B, d_A <= 4, d_B <= 8");
    }
    // A: slots 1,2 carry P_A (from the swap on A), slots 3..6 carry P'_A (from Q).
    // B: slots 1,2 carry the identity, slots 3..6 carry P'_B.
    const std::vector<int> labels_a = {0, 0, 1, 1, 1, 1};
    const std::vector<int> labels_b = {kIdentitySlot, kIdentitySlot, 0, 0, 0, 0};
    CovarianceSumResult r;
    r.d_a = d_a;
    r.d_b = d_b;
    r.enumerated_sum = 0;
    r.factorized_sum = 0;
    std::map<CycleType, BigInt> per_class;
    for (const Permutation &pi : enumerate_sym(6)) {
        GaussianInt fa = pauli_label_sum_explicit(pi, labels_a, 2, n_a);
        GaussianInt fb = pauli_label_sum_explicit(pi, labels_b, 1, n_b);
        BigInt term = real_part(fa * fb, pi.str());
        per_class[pi.cycle_type()] += term;
        r.enumerated_sum += term;
        GaussianInt ga = pauli_label_sum(pi, labels_a, 2, n_a);
        GaussianInt gb = pauli_label_sum(pi, labels_b, 1, n_b);
        r.factorized_sum += real_part(ga * gb, pi.str());
    }
    for (const auto &[type, poly] : covariance_class_table()) {
        BigInt tab = eval(poly, d_a, d_b);
        BigInt got = per_class[type];
        r.classes.push_back(ClassDiagnostic{type, got, tab, got == tab});
    }
    BigInt d = BigInt(d_a) * d_b;
    BigInt denom = d * d * d_a * rising_factorial(static_cast<std::uint64_t>(d_a * d_b), 6);
    r.intermediate = make_rational(r.enumerated_sum, denom);
    BigInt sum_ab = BigInt(d_a) + d_b;
    r.expected_intermediate = make_rational(4 * sum_ab, d * (d + 1) * (d + 3));
    BigInt a4b3 = BigInt(d_a) * d_a * d_a * d_a * d_b * d_b * d_b;
    r.tabulated_intermediate = make_rational(4 * sum_ab, a4b3 * (d + 1) * (d + 3));
    r.covariance = Rational(d) * r.intermediate - make_rational(4 * sum_ab, (d + 1) * (d + 3));
    if (r.enumerated_sum != r.factorized_sum) {
        throw VerificationError("Covariance sum paths disagree at (" + std::to_string(d_a) + "," + std::to_string(d_b) +
                                ")");
    }
    if (r.covariance != 0) {
        throw VerificationError("Nonzero covariance " + to_string(r.covariance) + " at (" + std::to_string(d_a) + "," +
                                std::to_string(d_b) + "); intermediate E[Tr(psi_A^2) Tr(Q psi^4)] = " +
                                to_string(r.intermediate));
    }
    return r;
}

}  // namespace stabent
