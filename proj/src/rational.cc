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

#include "stabent/rational.h"

#include <stdexcept>

namespace stabent {

Rational make_rational(const BigInt &num, const BigInt &den) {
    if (den == 0) {
        throw std::domain_error("Rational with zero denominator");
    }
    if (den < 0) {
        return Rational(BigInt(-num), BigInt(-den));
    }
    return Rational(num, den);
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

double to_double(const BigInt &v) {
    return v.convert_to<double>();
}

std::string to_string(const Rational &r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

BigInt rising_factorial(std::uint64_t d, unsigned k) {
    BigInt out = 1;
    for (unsigned i = 0; i < k; i++) {
        out *= BigInt(d + i);
    }
    return out;
}

BigInt factorial(unsigned k) {
    return rising_factorial(1, k);
}

}  // namespace stabent
