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

#ifndef STABENT_RNG_H
#define STABENT_RNG_H

#include <complex>
#include <cstdint>
#include <random>

namespace stabent {

/// A reproducible random stream derived from a master seed and a stream index.
///
/// Replaying (seed, stream) yields the same draws bit-for-bit. Gaussian draws
/// use Box-Muller on top of the raw 64-bit engine output, so they do not depend
/// on the standard library's distribution implementations.
class RngStream {
   public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal draw.
    double normal();

    /// Complex Gaussian with independent N(0, 1/2) parts, so E|z|^2 = 1.
    std::complex<double> complex_normal();

   private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace stabent

#endif
