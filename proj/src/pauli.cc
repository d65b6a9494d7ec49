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

#include "stabent/pauli.h"

#include <stdexcept>

namespace stabent {

PauliString::PauliString(unsigned n, std::uint64_t x_mask, std::uint64_t z_mask) : n(n), x_mask(x_mask), z_mask(z_mask) {
    if (n > 63) {
        throw std::invalid_argument("PauliString supports at most 63 qubits");
    }
    std::uint64_t limit = n == 0 ? 0 : ((std::uint64_t{1} << n) - 1);
    if ((x_mask & ~limit) != 0 || (z_mask & ~limit) != 0) {
        throw std::invalid_argument("PauliString masks use bits above the qubit count");
    }
}

PauliString PauliString::from_text(const std::string &text) {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (size_t q = 0; q < text.size(); q++) {
        std::uint64_t bit = std::uint64_t{1} << q;
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw std::invalid_argument("Unrecognized Pauli character in '" + text + "'");
        }
    }
    return PauliString(static_cast<unsigned>(text.size()), x, z);
}

std::string PauliString::str() const {
    std::string out;
    for (unsigned q = 0; q < n; q++) {
        bool xb = (x_mask >> q) & 1;
        bool zb = (z_mask >> q) & 1;
        out.push_back("IZXY"[2 * xb + zb]);
    }
    return out;
}

PauliOp PauliOp::hermitian(const PauliString &p, bool negative) {
    PauliOp op{p.x_mask, p.z_mask, static_cast<std::uint8_t>(p.y_count() & 3)};
    if (negative) {
        op.phase = (op.phase + 2) & 3;
    }
    return op;
}

PauliOp PauliOp::operator*(const PauliOp &rhs) const {
    // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}
    unsigned anti = static_cast<unsigned>(std::popcount(z & rhs.x));
    PauliOp out;
    out.x = x ^ rhs.x;
    out.z = z ^ rhs.z;
    out.phase = static_cast<std::uint8_t>((phase + rhs.phase + 2 * anti) & 3);
    return out;
}

bool PauliOp::sign() const {
    if (!is_hermitian()) {
        throw std::logic_error("sign() requires a Hermitian Pauli operator");
    }
    unsigned herm = static_cast<unsigned>(std::popcount(x & z)) & 3;
    return ((phase - herm) & 3) == 2;
}

}  // namespace stabent
