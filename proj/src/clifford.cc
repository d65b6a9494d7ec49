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

#include "stabent/clifford.h"

#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace stabent {

namespace {

using Mat = Eigen::MatrixXcd;

std::tuple<std::uint64_t, std::uint64_t, std::uint8_t> key(const PauliOp &p) {
    return {p.x, p.z, static_cast<std::uint8_t>(p.phase & 3)};
}

bool commutes(const PauliOp &a, const PauliOp &b) {
    return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

PauliOp single_x(unsigned q) {
    return {std::uint64_t{1} << q, 0, 0};
}

PauliOp single_z(unsigned q) {
    return {0, std::uint64_t{1} << q, 0};
}

PauliOp single_y(unsigned q) {
    return {std::uint64_t{1} << q, std::uint64_t{1} << q, 1};
}

enum class Gate { h, s, cnot };

struct GateSpec {
    Gate gate;
    unsigned a;
    unsigned b;
};

CliffordTableau gate_tableau(const GateSpec &g, unsigned n) {
    CliffordTableau t = CliffordTableau::identity(n);
    switch (g.gate) {
        case Gate::h:
            t.images[g.a] = single_z(g.a);
            t.images[n + g.a] = single_x(g.a);
            break;
        case Gate::s:
            t.images[g.a] = single_y(g.a);
            break;
        case Gate::cnot:
            t.images[g.a] = single_x(g.a) * single_x(g.b);
            t.images[n + g.b] = single_z(g.a) * single_z(g.b);
            break;
    }
    return t;
}

Mat gate_matrix(const GateSpec &g, unsigned n) {
    std::size_t dim = std::size_t{1} << n;
    Mat m = Mat::Zero(dim, dim);
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t j = 0; j < dim; j++) {
        std::size_t bit_a = (j >> g.a) & 1;
        switch (g.gate) {
            case Gate::h:
                m(j & ~(std::size_t{1} << g.a), j) += r;
                m(j | (std::size_t{1} << g.a), j) += bit_a ? -r : r;
                break;
            case Gate::s:
                m(j, j) = bit_a ? Complex(0, 1) : Complex(1, 0);
                break;
            case Gate::cnot:
                m(bit_a ? j ^ (std::size_t{1} << g.b) : j, j) = 1;
                break;
        }
    }
    return m;
}

// Tableau of g * c: conjugate each image of c by g.
CliffordTableau compose(const CliffordTableau &g, const CliffordTableau &c) {
    CliffordTableau out = c;
    for (PauliOp &img : out.images) {
        img = g.conjugate(img);
    }
    return out;
}

}  // namespace

CliffordTableau CliffordTableau::identity(unsigned n) {
    CliffordTableau t;
    t.n = n;
    for (unsigned q = 0; q < n; q++) {
        t.images.push_back(single_x(q));
    }
    for (unsigned q = 0; q < n; q++) {
        t.images.push_back(single_z(q));
    }
    return t;
}

PauliOp CliffordTableau::conjugate(const PauliOp &p) const {
    // i^phase X^x Z^z maps to i^phase prod_q C X_q C^dag prod_q C Z_q C^dag.
    PauliOp out{0, 0, static_cast<std::uint8_t>(p.phase & 3)};
    for (unsigned q = 0; q < n; q++) {
        if ((p.x >> q) & 1) {
            out = out * images[q];
        }
    }
    for (unsigned q = 0; q < n; q++) {
        if ((p.z >> q) & 1) {
            out = out * images[n + q];
        }
    }
    return out;
}

bool CliffordTableau::is_symplectic() const {
    if (images.size() != 2 * n) {
        return false;
    }
    for (const PauliOp &img : images) {
        if (!img.is_hermitian() || (img.x == 0 && img.z == 0)) {
            return false;
        }
    }
    for (unsigned i = 0; i < 2 * n; i++) {
        for (unsigned j = i + 1; j < 2 * n; j++) {
            bool expect = !(j == i + n);
            if (commutes(images[i], images[j]) != expect) {
                return false;
            }
        }
    }
    return true;
}

bool CliffordTableau::operator<(const CliffordTableau &other) const {
    if (n != other.n) {
        return n < other.n;
    }
    for (std::size_t i = 0; i < images.size(); i++) {
        auto a = key(images[i]);
        auto b = key(other.images[i]);
        if (a != b) {
            return a < b;
        }
    }
    return false;
}

Eigen::MatrixXcd pauli_op_matrix(const PauliOp &op, unsigned n) {
    std::size_t dim = std::size_t{1} << n;
    static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Mat m = Mat::Zero(dim, dim);
    for (std::size_t j = 0; j < dim; j++) {
        int sign = std::popcount(op.z & j) & 1;
        m(j ^ op.x, j) = kPhase[op.phase & 3] * (sign ? -1.0 : 1.0);
    }
    return m;
}

std::vector<CliffordElement> enumerate_clifford(unsigned n) {
    if (n < 1 || n > 2) {
        throw std::invalid_argument("Clifford enumeration supports n in {1, 2}");
    }
    std::vector<GateSpec> gates;
    for (unsigned q = 0; q < n; q++) {
        gates.push_back({Gate::h, q, q});
        gates.push_back({Gate::s, q, q});
    }
    for (unsigned a = 0; a < n; a++) {
        for (unsigned b = 0; b < n; b++) {
            if (a != b) {
                gates.push_back({Gate::cnot, a, b});
            }
        }
    }
    std::vector<CliffordTableau> gate_tabs;
    std::vector<Mat> gate_mats;
    for (const GateSpec &g : gates) {
        gate_tabs.push_back(gate_tableau(g, n));
        gate_mats.push_back(gate_matrix(g, n));
    }

    std::vector<CliffordElement> out;
    std::set<CliffordTableau> seen;
    std::deque<std::size_t> frontier;
    CliffordElement id{CliffordTableau::identity(n), Mat::Identity(1 << n, 1 << n)};
    seen.insert(id.tableau);
    out.push_back(id);
    frontier.push_back(0);
    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        for (std::size_t g = 0; g < gates.size(); g++) {
            CliffordTableau next = compose(gate_tabs[g], out[cur].tableau);
            if (seen.insert(next).second) {
                out.push_back({next, gate_mats[g] * out[cur].unitary});
                frontier.push_back(out.size() - 1);
            }
        }
    }
    return out;
}

const std::vector<CliffordElement> &clifford_group(unsigned n) {
    if (n == 1) {
        static const std::vector<CliffordElement> c1 = enumerate_clifford(1);
        return c1;
    }
    if (n == 2) {
        static const std::vector<CliffordElement> c2 = enumerate_clifford(2);
        return c2;
    }
    throw std::invalid_argument("Clifford enumeration supports n in {1, 2}");
}

std::vector<PureState> clifford_orbit_states(unsigned n) {
    const auto &group = clifford_group(n);
    std::size_t dim = std::size_t{1} << n;
    std::map<std::vector<long long>, PureState> unique;
    for (const CliffordElement &c : group) {
        Amplitudes amps(dim);
        for (std::size_t i = 0; i < dim; i++) {
            amps[i] = c.unitary(i, 0);
        }
        // Fix the global phase so the first non-negligible amplitude is real positive.
        std::size_t lead = 0;
        while (std::abs(amps[lead]) < 1e-6) {
            lead++;
        }
        Complex phase = std::conj(amps[lead]) / std::abs(amps[lead]);
        std::vector<long long> k;
        for (Complex &a : amps) {
            a *= phase;
            k.push_back(std::llround(a.real() * 1e8));
            k.push_back(std::llround(a.imag() * 1e8));
        }
        unique.emplace(k, PureState(amps, Shape::from_qubits(n, n / 2)));
    }
    std::vector<PureState> out;
    for (auto &[k, s] : unique) {
        out.push_back(s);
    }
    return out;
}

double clifford_orbit_antiflatness(const PureState &psi) {
    if (psi.shape().d_a != 2 || psi.shape().d_b != 2) {
        throw std::invalid_argument("clifford_orbit_antiflatness needs a (2,2) state");
    }
    const auto &group = clifford_group(2);
    double total = 0.0;
    for (const CliffordElement &c : group) {
        total += antiflatness(apply_unitary(c.unitary, psi));
    }
    return total / static_cast<double>(group.size());
}

}  // namespace stabent
