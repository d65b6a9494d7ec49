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

#ifndef STABENT_PERMUTATION_H
#define STABENT_PERMUTATION_H

#include <Eigen/Dense>
#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stabent/rational.h"

namespace stabent {

/// Descending partition of k giving the cycle lengths of a permutation.
struct CycleType {
    std::vector<int> parts;

    int size() const;
    /// k! / prod_l (l^{m_l} m_l!).
    BigInt class_size() const;
    /// Letter notation, e.g. "(abc)(de)"; the identity is "()".
    std::string str() const;

    auto operator<=>(const CycleType &) const = default;
};

/// All partitions of k, in descending lexicographic order.
std::vector<CycleType> partitions(int k);

/// Permutation of {0..k-1} in one-line notation: p[i] is the image of i.
class Permutation {
   public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int k);
    /// Cycle notation with 1-based digits, e.g. "(12)(34)" or "()" for the identity.
    static Permutation parse(int k, const std::string &cycles);

    int size() const {
        return static_cast<int>(images_.size());
    }
    int operator[](int i) const {
        return images_[i];
    }
    const std::vector<int> &images() const {
        return images_;
    }

    Permutation inverse() const;
    /// Composition: (a * b)[i] = a[b[i]].
    Permutation operator*(const Permutation &rhs) const;

    /// Cycles i -> p[i] -> p[p[i]] ..., each starting at its smallest element, ordered by that element.
    const std::vector<std::vector<int>> &cycles() const {
        return cycles_;
    }
    int num_cycles() const {
        return static_cast<int>(cycles_.size());
    }
    CycleType cycle_type() const;
    /// 1-based cycle notation with fixed points omitted.
    std::string str() const;

    bool operator==(const Permutation &other) const {
        return images_ == other.images_;
    }
    bool operator<(const Permutation &other) const {
        return images_ < other.images_;
    }

   private:
    std::vector<int> images_;
    std::vector<std::vector<int>> cycles_;
};

/// All k! permutations in lexicographic order; k <= 8.
std::vector<Permutation> enumerate_sym(int k);

/// Class sizes from the cycle-type formula.
std::map<CycleType, BigInt> class_sizes(int k);
/// Class sizes by counting enumerate_sym(k).
std::map<CycleType, std::uint64_t> class_sizes_bruteforce(int k);

/// Tr[T_pi (A_1 x ... x A_k)] where T_pi |i_1..i_k> = |i_{pi^-1(1)} .. i_{pi^-1(k)}>.
///
/// Factorizes over cycles: each cycle c = (p, pi(p), ...) contributes
/// Tr(A_p A_{pi^-1(p)} A_{pi^-2(p)} ...).
std::complex<double> perm_tensor_trace(const Permutation &pi, const std::vector<Eigen::MatrixXcd> &ops);

/// Same trace from the explicit index map of T_pi on (C^d)^{x k}; needs d^k <= 4096.
std::complex<double> perm_tensor_trace_dense(const Permutation &pi, const std::vector<Eigen::MatrixXcd> &ops);

}  // namespace stabent

#endif
