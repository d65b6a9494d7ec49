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

#include "stabent/permutation.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stabent {

int CycleType::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

BigInt CycleType::class_size() const {
    BigInt denom = 1;
    std::map<int, unsigned> mult;
    for (int l : parts) {
        denom *= l;
        mult[l]++;
    }
    for (auto [l, m] : mult) {
        denom *= factorial(m);
    }
    return factorial(static_cast<unsigned>(size())) / denom;
}

std::string CycleType::str() const {
    std::string out;
    char next = 'a';
    for (int l : parts) {
        if (l == 1) {
            continue;
        }
        out.push_back('(');
        for (int i = 0; i < l; i++) {
            out.push_back(next++);
        }
        out.push_back(')');
    }
    return out.empty() ? "()" : out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &cur, std::vector<CycleType> &out) {
    if (remaining == 0) {
        out.push_back(CycleType{cur});
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; p--) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<CycleType> partitions(int k) {
    std::vector<CycleType> out;
    std::vector<int> cur;
    partitions_rec(k, k, cur, out);
    return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    int k = size();
    std::vector<bool> seen(k, false);
    for (int v : images_) {
        if (v < 0 || v >= k || seen[v]) {
            throw std::invalid_argument("Permutation images must be a bijection of {0..k-1}");
        }
        seen[v] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (int start = 0; start < k; start++) {
        if (seen[start]) {
            continue;
        }
        std::vector<int> cyc;
        for (int i = start; !seen[i]; i = images_[i]) {
            seen[i] = true;
            cyc.push_back(i);
        }
        cycles_.push_back(std::move(cyc));
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(int k, const std::string &text) {
    std::vector<int> images(k);
    std::iota(images.begin(), images.end(), 0);
    std::vector<int> cur;
    bool open = false;
    auto close_cycle = [&]() {
        for (std::size_t i = 0; i < cur.size(); i++) {
            images[cur[i]] = cur[(i + 1) % cur.size()];
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ' ') {
            continue;
        }
        if (c == '(') {
            if (open) {
                throw std::invalid_argument("Nested cycle in '" + text + "'");
            }
            open = true;
        } else if (c == ')') {
            if (!open) {
                throw std::invalid_argument("Unbalanced cycle in '" + text + "'");
            }
            close_cycle();
            open = false;
        } else if (c >= '1' && c <= '9' && open) {
            int v = c - '1';
            if (v >= k) {
                throw std::invalid_argument("Cycle element out of range in '" + text + "'");
            }
            cur.push_back(v);
        } else {
            throw std::invalid_argument("Bad character in cycle notation '" + text + "'");
        }
    }
    if (open) {
        throw std::invalid_argument("Unterminated cycle in '" + text + "'");
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); i++) {
        inv[images_[i]] = i;
    }
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation &rhs) const {
    if (rhs.size() != size()) {
        throw std::invalid_argument("Cannot compose permutations of different degree");
    }
    std::vector<int> out(images_.size());
    for (int i = 0; i < size(); i++) {
        out[i] = images_[rhs.images_[i]];
    }
    return Permutation(std::move(out));
}

CycleType Permutation::cycle_type() const {
    CycleType t;
    for (const auto &c : cycles_) {
        t.parts.push_back(static_cast<int>(c.size()));
    }
    std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
    return t;
}

std::string Permutation::str() const {
    std::string out;
    for (const auto &c : cycles_) {
        if (c.size() < 2) {
            continue;
        }
        out.push_back('(');
        for (int v : c) {
            out += std::to_string(v + 1);
        }
        out.push_back(')');
    }
    return out.empty() ? "()" : out;
}

std::vector<Permutation> enumerate_sym(int k) {
    if (k < 0 || k > 8) {
        throw std::invalid_argument("enumerate_sym supports 0 <= k <= 8");
    }
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::map<CycleType, BigInt> class_sizes(int k) {
    std::map<CycleType, BigInt> out;
    for (const CycleType &t : partitions(k)) {
        out[t] = t.class_size();
    }
    return out;
}

std::map<CycleType, std::uint64_t> class_sizes_bruteforce(int k) {
    std::map<CycleType, std::uint64_t> out;
    for (const Permutation &p : enumerate_sym(k)) {
        out[p.cycle_type()]++;
    }
    return out;
}

namespace {

std::size_t check_ops(const Permutation &pi, const std::vector<Eigen::MatrixXcd> &ops) {
    if (static_cast<int>(ops.size()) != pi.size() || ops.empty()) {
        throw std::invalid_argument("Need one operator per permutation slot");
    }
    Eigen::Index d = ops[0].rows();
    for (const auto &op : ops) {
        if (op.rows() != d || op.cols() != d) {
            throw std::invalid_argument("All operators must be square with equal dimension");
        }
    }
    return static_cast<std::size_t>(d);
}

}  // namespace

std::complex<double> perm_tensor_trace(const Permutation &pi, const std::vector<Eigen::MatrixXcd> &ops) {
    std::size_t d = check_ops(pi, ops);
    Permutation inv = pi.inverse();
    std::complex<double> out = 1.0;
    for (const auto &c : pi.cycles()) {
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(d, d);
        int p = c.front();
        for (std::size_t step = 0; step < c.size(); step++) {
            acc = acc * ops[p];
            p = inv[p];
        }
        out *= acc.trace();
    }
    return out;
}

std::complex<double> perm_tensor_trace_dense(const Permutation &pi, const std::vector<Eigen::MatrixXcd> &ops) {
    std::size_t d = check_ops(pi, ops);
    int k = pi.size();
    std::size_t total = 1;
    for (int i = 0; i < k; i++) {
        total *= d;
        if (total > 4096) {
            throw std::invalid_argument("perm_tensor_trace_dense needs d^k <= 4096");
        }
    }
    // Digit p of an index is slot p (slot 0 most significant).
    auto digits = [&](std::size_t idx) {
        std::vector<std::size_t> out(k);
        for (int p = k - 1; p >= 0; p--) {
            out[p] = idx % d;
            idx /= d;
        }
        return out;
    };
    auto compose = [&](const std::vector<std::size_t> &dig) {
        std::size_t idx = 0;
        for (int p = 0; p < k; p++) {
            idx = idx * d + dig[p];
        }
        return idx;
    };
    // T_pi maps basis index b to target[b]: slot pi(p) of the image holds digit p of b.
    std::vector<std::size_t> target(total);
    for (std::size_t b = 0; b < total; b++) {
        std::vector<std::size_t> in = digits(b);
        std::vector<std::size_t> out(k);
        for (int p = 0; p < k; p++) {
            out[pi[p]] = in[p];
        }
        target[b] = compose(out);
    }
    // Tr(T M) = sum_{a,b} T[a,b] M[b,a] = sum_b M[b, target[b]].
    std::complex<double> acc = 0;
    for (std::size_t b = 0; b < total; b++) {
        std::vector<std::size_t> row = digits(b);
        std::vector<std::size_t> col = digits(target[b]);
        std::complex<double> entry = 1.0;
        for (int p = 0; p < k && entry != 0.0; p++) {
            entry *= ops[p](row[p], col[p]);
        }
        acc += entry;
    }
    return acc;
}

}  // namespace stabent
