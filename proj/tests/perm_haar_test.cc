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

#include <gtest/gtest.h>

#include <cmath>

#include "stabent/closed_forms.h"
#include "stabent/moment_sums.h"
#include "stabent/pauli_words.h"
#include "stabent/permutation.h"
#include "stabent/rng.h"
#include "stabent/state.h"
#include "stabent/weingarten.h"

using namespace stabent;

namespace {

Eigen::MatrixXcd random_matrix(int dim, RngStream &rng) {
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            m(i, j) = rng.complex_normal();
        }
    }
    return m;
}

std::map<std::string, std::uint64_t> by_name(int k) {
    std::map<std::string, std::uint64_t> out;
    for (const auto &[type, size] : class_sizes(k)) {
        out[type.str()] = static_cast<std::uint64_t>(size);
    }
    return out;
}

}  // namespace

TEST(permutation, parse_and_compose) {
    Permutation p = Permutation::parse(4, "(123)");
    EXPECT_EQ(p[0], 1);
    EXPECT_EQ(p[1], 2);
    EXPECT_EQ(p[2], 0);
    EXPECT_EQ(p.str(), "(123)");
    EXPECT_EQ(p * p.inverse(), Permutation::identity(4));
    EXPECT_EQ((p * p).str(), "(132)");
    EXPECT_EQ(Permutation::parse(4, "()").str(), "()");
    EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation::parse(3, "(14)"), std::invalid_argument);
}

TEST(permutation, class_sizes_match_tables) {
    std::map<std::string, std::uint64_t> s4 = {
        {"()", 1}, {"(ab)", 6}, {"(ab)(cd)", 3}, {"(abc)", 8}, {"(abcd)", 6}};
    EXPECT_EQ(by_name(4), s4);
    std::map<std::string, std::uint64_t> s6 = {
        {"()", 1},         {"(ab)", 15},        {"(abc)", 40},      {"(abcd)", 90},
        {"(ab)(cd)", 45},  {"(abcde)", 144},    {"(abc)(de)", 120}, {"(ab)(cd)(ef)", 15},
        {"(abcd)(ef)", 90}, {"(abc)(def)", 40}, {"(abcdef)", 120}};
    EXPECT_EQ(by_name(6), s6);
    std::map<std::string, std::uint64_t> s8 = {
        {"()", 1},                 {"(ab)", 28},           {"(abc)", 112},          {"(abcd)", 420},
        {"(ab)(cd)", 210},         {"(abcde)", 1344},      {"(abc)(de)", 1120},     {"(abcdef)", 3360},
        {"(abcd)(ef)", 2520},      {"(ab)(cd)(ef)", 420},  {"(abc)(def)", 1120},    {"(abcdefg)", 5760},
        {"(abc)(de)(fg)", 1680},   {"(abcd)(efg)", 3360},  {"(abcde)(fg)", 4032},   {"(ab)(cd)(ef)(gh)", 105},
        {"(abcd)(ef)(gh)", 1260},  {"(abc)(def)(gh)", 1120}, {"(abcdef)(gh)", 3360}, {"(abcde)(fgh)", 2688},
        {"(abcd)(efgh)", 1260},    {"(abcdefgh)", 5040}};
    EXPECT_EQ(by_name(8), s8);
    for (int k = 1; k <= 8; k++) {
        auto brute = class_sizes_bruteforce(k);
        auto closed = class_sizes(k);
        ASSERT_EQ(brute.size(), closed.size());
        std::uint64_t total = 0;
        for (const auto &[type, size] : closed) {
            EXPECT_EQ(brute.at(type), static_cast<std::uint64_t>(size)) << type.str();
            total += brute.at(type);
        }
        EXPECT_EQ(BigInt(total), factorial(k));
    }
}

TEST(permutation, tensor_trace_matches_dense_on_s4) {
    RngStream rng(11, 0);
    std::vector<Eigen::MatrixXcd> ops;
    for (int i = 0; i < 4; i++) {
        ops.push_back(random_matrix(3, rng));
    }
    for (const Permutation &p : enumerate_sym(4)) {
        auto fast = perm_tensor_trace(p, ops);
        auto dense = perm_tensor_trace_dense(p, ops);
        EXPECT_LT(std::abs(fast - dense), 1e-10 * (1 + std::abs(dense))) << p.str();
    }
}

TEST(permutation, tensor_trace_matches_dense_random) {
    RngStream rng(12, 0);
    for (int trial = 0; trial < 100; trial++) {
        int k = 2 + static_cast<int>(rng.next_u64() % 5);
        int dim = k <= 4 ? 3 : 2;
        std::vector<int> images(k);
        for (int i = 0; i < k; i++) {
            images[i] = i;
        }
        for (int i = k - 1; i > 0; i--) {
            std::swap(images[i], images[rng.next_u64() % (i + 1)]);
        }
        Permutation p(images);
        std::vector<Eigen::MatrixXcd> ops;
        for (int i = 0; i < k; i++) {
            ops.push_back(random_matrix(dim, rng));
        }
        auto fast = perm_tensor_trace(p, ops);
        auto dense = perm_tensor_trace_dense(p, ops);
        EXPECT_LT(std::abs(fast - dense), 1e-9 * (1 + std::abs(dense))) << p.str();
    }
}

TEST(pauli_words, label_sum_factorized_equals_explicit) {
    for (const Permutation &p : enumerate_sym(4)) {
        for (unsigned n = 1; n <= 2; n++) {
            EXPECT_EQ(pauli_label_sum(p, {0, 0, 1, 1}, 2, n), pauli_label_sum_explicit(p, {0, 0, 1, 1}, 2, n));
            EXPECT_EQ(pauli_label_sum(p, {kIdentitySlot, 0, 0, 0}, 1, n),
                      pauli_label_sum_explicit(p, {kIdentitySlot, 0, 0, 0}, 1, n));
        }
    }
}

TEST(pauli_words, identity_permutation_counts_traces) {
    // Tr(P)^4 vanishes except for P = I, giving d^4 times the number of identity labels.
    GaussianInt s = pauli_label_sum(Permutation::identity(4), {0, 0, 0, 0}, 1, 2);
    EXPECT_EQ(s.re, BigInt(256));
    EXPECT_EQ(s.im, BigInt(0));
}

TEST(haar_moment, normalization) {
    for (int k = 1; k <= 8; k++) {
        for (std::int64_t d : {2, 3, 4, 8}) {
            Rational r = haar_moment_normalization(k, d);
            EXPECT_EQ(r, make_rational(1, rising_factorial(d, k)));
        }
    }
}

TEST(variance_sum, matches_target) {
    for (std::int64_t d : {2, 4, 8}) {
        VarianceSumResult r = verify_variance_sum(d);
        EXPECT_EQ(r.value, r.target) << d;
        EXPECT_EQ(r.value, variance_sum_target(d));
        EXPECT_EQ(r.variance, var_m_lin(d)) << d;
        EXPECT_EQ(r.classes.size(), 22u);
        for (const auto &c : r.classes) {
            EXPECT_TRUE(c.matches) << c.type.str() << " at d=" << d;
        }
    }
    EXPECT_EQ(verify_variance_sum(2).variance, make_rational(4, 525));
}

TEST(variance_sum, explicit_enumeration_agrees) {
    for (std::int64_t d : {2, 4}) {
        EXPECT_EQ(variance_sum_explicit(d), verify_variance_sum(d).enumerated_sum) << d;
    }
}

TEST(covariance_sum, vanishes) {
    for (auto [da, db] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {2, 4}, {4, 4}}) {
        CovarianceSumResult r = verify_covariance_sum(da, db);
        EXPECT_EQ(r.enumerated_sum, r.factorized_sum);
        EXPECT_EQ(r.intermediate, r.expected_intermediate);
        EXPECT_EQ(r.covariance, Rational(0)) << da << "x" << db;
        EXPECT_EQ(r.classes.size(), 11u);
        for (const auto &c : r.classes) {
            EXPECT_TRUE(c.matches) << c.type.str() << " at " << da << "x" << db;
        }
    }
    EXPECT_EQ(verify_covariance_sum(2, 2).intermediate, make_rational(4, 35));
}

TEST(weingarten, gram_pseudo_inverse) {
    for (std::int64_t d : {2, 3, 4}) {
        WeingartenTable t = WeingartenTable::build(4, d);
        EXPECT_LT(t.pinv_residual(), 1e-9);
        if (d >= 4) {
            EXPECT_EQ(t.rank, 24);
            EXPECT_LT(t.inverse_residual(), 1e-9);
        }
    }
    // For d = 2 the antisymmetric irreps of S_4 drop out.
    EXPECT_EQ(WeingartenTable::build(4, 2).rank, 14);
}

TEST(weingarten, trace_perm_q_values) {
    EXPECT_EQ(trace_perm_q(Permutation::identity(4), 4), Rational(16));
    EXPECT_EQ(trace_perm_q(Permutation::parse(4, "(12)"), 4), Rational(4));
    EXPECT_EQ(trace_perm_q(Permutation::parse(4, "(123)"), 4), Rational(1));
    EXPECT_EQ(trace_perm_q(Permutation::parse(4, "(1234)"), 4), Rational(4));
    EXPECT_EQ(trace_perm_q(Permutation::parse(4, "(12)(34)"), 8), Rational(64));
}

TEST(weingarten, orbit_average_special_points) {
    EXPECT_NEAR(orbit_average_weingarten(SchmidtSpectrum::product(2), 2, 2), 0.36, 1e-9);
    EXPECT_NEAR(orbit_average_weingarten(SchmidtSpectrum::flat(2), 2, 2), 0.3, 1e-9);
}

TEST(weingarten, orbit_average_matches_closed_form) {
    RngStream rng(5, 0);
    for (auto [da, db] : {std::pair<std::int64_t, std::int64_t>{2, 4}, {4, 4}, {2, 8}, {4, 8}}) {
        for (int trial = 0; trial < 20; trial++) {
            SchmidtSpectrum lam = SchmidtSpectrum::random(static_cast<std::size_t>(da), rng);
            EXPECT_NEAR(orbit_average_weingarten(lam, da, db), mbar(lam, da, db), 1e-9) << da << "x" << db;
        }
        EXPECT_NEAR(orbit_average_weingarten(SchmidtSpectrum::product(da), da, db),
                    to_double(mbar_separable(da, db)), 1e-9);
    }
}

TEST(weingarten, melperm_table) {
    auto rows = check_melperm_table();
    ASSERT_EQ(rows.size(), 24u);
    // Two printed entries disagree with the operator convention: the delta pattern of (34)
    // repeats the identity row, and the 4-cycle (1243) lists 1 instead of d.
    std::vector<std::string> bad_patterns;
    std::vector<std::string> bad_traces;
    for (const auto &r : rows) {
        if (!r.pattern_matches) {
            bad_patterns.push_back(r.sigma);
        }
        if (!r.trace_q_matches) {
            bad_traces.push_back(r.sigma);
            EXPECT_EQ(r.computed_trace_q, "d");
        }
    }
    EXPECT_EQ(bad_patterns, std::vector<std::string>{"(34)"});
    EXPECT_EQ(bad_traces, std::vector<std::string>{"(1243)"});
}
