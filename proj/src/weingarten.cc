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

#include "stabent/weingarten.h"

#include <bit>
#include <stdexcept>

#include "stabent/moment_sums.h"
#include "stabent/pauli_words.h"

namespace stabent {

WeingartenTable WeingartenTable::build(int k, std::int64_t d, double tol) {
    if (k < 1 || k > 6 || d < 1) {
        throw std::invalid_argument("WeingartenTable supports 1 <= k <= 6 and d >= 1");
    }
    WeingartenTable t;
    t.k = k;
    t.d = d;
    t.perms = enumerate_sym(k);
    std::size_t m = t.perms.size();
    t.gram.resize(m, m);
    for (std::size_t i = 0; i < m; i++) {
        Permutation inv = t.perms[i].inverse();
        for (std::size_t j = 0; j < m; j++) {
            t.gram(i, j) = std::pow(static_cast<double>(d), (inv * t.perms[j]).num_cycles());
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t.gram);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("Gram matrix eigendecomposition failed");
    }
    const Eigen::VectorXd &ev = es.eigenvalues();
    double cutoff = tol * ev.cwiseAbs().maxCoeff();
    Eigen::VectorXd inv_ev(ev.size());
    t.rank = 0;
    for (Eigen::Index i = 0; i < ev.size(); i++) {
        if (std::abs(ev(i)) > cutoff) {
            inv_ev(i) = 1.0 / ev(i);
            t.rank++;
        } else {
            inv_ev(i) = 0.0;
        }
    }
    t.wg = es.eigenvectors() * inv_ev.asDiagonal() * es.eigenvectors().transpose();
    if (t.pinv_residual() > 1e-8 * t.gram.cwiseAbs().maxCoeff()) {
        throw std::runtime_error("Weingarten pseudo-inverse is ill-conditioned");
    }
    return t;
}

double WeingartenTable::inverse_residual() const {
    return (wg * gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

double WeingartenTable::pinv_residual() const {
    return (gram * wg * gram - gram).cwiseAbs().maxCoeff();
}

Rational haar_moment_normalization(int k, std::int64_t d) {
    if (k < 1 || k > 8 || d < 1) {
        throw std::invalid_argument("haar_moment_normalization supports 1 <= k <= 8, d >= 1");
    }
    BigInt total = 0;
    for (const Permutation &p : enumerate_sym(k)) {
        total += boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(p.num_cycles()));
    }
    BigInt expected = rising_factorial(static_cast<std::uint64_t>(d), static_cast<unsigned>(k));
    if (total != expected) {
        throw VerificationError("sum_pi d^cycles(pi) = " + total.str() + " but (d)_k = " + expected.str());
    }
    return make_rational(1, expected);
}

Rational trace_perm_q(const Permutation &pi, std::int64_t d) {
    if (pi.size() != 4) {
        throw std::invalid_argument("trace_perm_q expects a permutation of S_4");
    }
    if (d < 1 || !is_power_of_two(static_cast<std::size_t>(d))) {
        throw std::invalid_argument("trace_perm_q needs d = 2^n");
    }
    unsigned n = static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(d)));
    GaussianInt s = pauli_label_sum(pi, {0, 0, 0, 0}, 1, n);
    if (s.im != 0) {
        throw VerificationError("Tr[T_pi Q] is not real");
    }
    return make_rational(s.re, BigInt(d) * d);
}

namespace {

// a_sigma = sum_pi W_{pi sigma} Tr[T_pi Q] for one subsystem.
Eigen::VectorXd weighted_q(const WeingartenTable &t) {
    Eigen::VectorXd trq(t.perms.size());
    for (std::size_t i = 0; i < t.perms.size(); i++) {
        trq(i) = to_double(trace_perm_q(t.perms[i], t.d));
    }
    return t.wg.transpose() * trq;
}

}  // namespace

double orbit_average_weingarten(const SchmidtSpectrum &lambda, std::int64_t d_a, std::int64_t d_b) {
    if (static_cast<std::int64_t>(lambda.size()) != d_a || d_a > d_b) {
        throw std::invalid_argument("Spectrum length must equal d_A <= d_B");
    }
    WeingartenTable wa = WeingartenTable::build(4, d_a);
    WeingartenTable wb = WeingartenTable::build(4, d_b);
    Eigen::VectorXd a = weighted_q(wa);
    Eigen::VectorXd b = weighted_q(wb);
    const auto &perms = wa.perms;
    std::size_t m = perms.size();
    std::vector<Permutation> inv;
    for (const auto &p : perms) {
        inv.push_back(p.inverse());
    }
    // <y| T_s |x> = 1 iff y_{s(q)} = x_q. Both factors share the index tuple x (ijkl) and y (mnop),
    // so the pair (s, t) needs x_{s^-1 ... } consistency: y_{s(q)} = x_q and y_{t(q)} = x_q.
    const auto &lam = lambda.lambdas();
    std::size_t da = static_cast<std::size_t>(d_a);
    std::size_t tuples = da * da * da * da;
    Eigen::MatrixXd contraction = Eigen::MatrixXd::Zero(m, m);
    int x[4];
    int y1[4];
    for (std::size_t idx = 0; idx < tuples; idx++) {
        std::size_t rest = idx;
        double weight = 1.0;
        for (int q = 0; q < 4; q++) {
            x[q] = static_cast<int>(rest % da);
            rest /= da;
            weight *= lam[x[q]];
        }
        if (weight == 0) {
            continue;
        }
        // sqrt(prod lambda_x) sqrt(prod lambda_y) = prod lambda_x, since y permutes x.
        for (std::size_t s = 0; s < m; s++) {
            const Permutation &si = inv[s];
            for (int q = 0; q < 4; q++) {
                y1[si[q]] = x[q];
            }
            for (std::size_t t = 0; t < m; t++) {
                const Permutation &ti = inv[t];
                bool ok = true;
                for (int q = 0; q < 4 && ok; q++) {
                    ok = y1[ti[q]] == x[q];
                }
                if (ok) {
                    contraction(s, t) += weight;
                }
            }
        }
    }
    double integral = a.dot(contraction * b);
    return 1.0 - static_cast<double>(d_a * d_b) * integral;
}

namespace {

struct TabulatedRow {
    const char *sigma;
    const char *pattern;
    const char *trace_q;
};

// Rows as printed; patterns list the partner of i, j, k, l among m, n, o, p.
const TabulatedRow kMelperm[] = {
    {"()", "mnop", "d^2"},     {"(34)", "mnop", "d"},     {"(23)", "monp", "d"},      {"(234)", "mopn", "1"},
    {"(243)", "mpno", "1"},    {"(24)", "mpon", "d"},     {"(12)", "nmop", "d"},      {"(12)(34)", "nmpo", "d^2"},
    {"(123)", "nomp", "1"},    {"(1234)", "nopm", "d"},   {"(1243)", "npmo", "1"},    {"(124)", "npom", "1"},
    {"(132)", "omnp", "1"},    {"(1342)", "ompn", "d"},   {"(13)", "onmp", "d"},      {"(134)", "onpm", "1"},
    {"(13)(24)", "opmn", "d^2"}, {"(1324)", "opnm", "d"}, {"(1432)", "pmno", "d"},    {"(142)", "pmon", "1"},
    {"(143)", "pnmo", "1"},    {"(14)", "pnom", "d"},     {"(1423)", "pomn", "d"},    {"(14)(23)", "ponm", "d^2"},
};

std::string pattern_string(const std::string &partners) {
    static const char kX[] = {'i', 'j', 'k', 'l'};
    std::string out;
    for (int q = 0; q < 4; q++) {
        out += "d_";
        out.push_back(kX[q]);
        out.push_back(partners[q]);
        if (q < 3) {
            out.push_back(' ');
        }
    }
    return out;
}

// Monomial in d identified from Tr[T_sigma Q] evaluated at two dimensions.
std::string trace_q_monomial(const Permutation &sigma) {
    Rational v2 = trace_perm_q(sigma, 2);
    Rational v4 = trace_perm_q(sigma, 4);
    if (v2 == 4 && v4 == 16) {
        return "d^2";
    }
    if (v2 == 2 && v4 == 4) {
        return "d";
    }
    if (v2 == 1 && v4 == 1) {
        return "1";
    }
    return "?" + to_string(v2) + "," + to_string(v4);
}

}  // namespace

std::vector<MelpermRow> check_melperm_table() {
    std::vector<MelpermRow> out;
    static const char kY[] = {'m', 'n', 'o', 'p'};
    for (const TabulatedRow &row : kMelperm) {
        Permutation sigma = Permutation::parse(4, row.sigma);
        // <mnop| T_sigma |ijkl> = prod_q delta(x_q, y_{sigma(q)}).
        std::string partners(4, '?');
        for (int q = 0; q < 4; q++) {
            partners[q] = kY[sigma[q]];
        }
        MelpermRow r;
        r.sigma = row.sigma;
        r.tabulated_pattern = pattern_string(row.pattern);
        r.computed_pattern = pattern_string(partners);
        r.tabulated_trace_q = row.trace_q;
        r.computed_trace_q = trace_q_monomial(sigma);
        r.pattern_matches = r.tabulated_pattern == r.computed_pattern;
        r.trace_q_matches = r.tabulated_trace_q == r.computed_trace_q;
        out.push_back(r);
    }
    return out;
}

}  // namespace stabent
