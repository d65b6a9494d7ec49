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

#ifndef STABENT_RATIONAL_H
#define STABENT_RATIONAL_H

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace stabent {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den with the sign moved to the numerator; throws on a zero denominator.
Rational make_rational(const BigInt &num, const BigInt &den);

double to_double(const Rational &r);
double to_double(const BigInt &v);

/// "p/q" (or "p" when q == 1).
std::string to_string(const Rational &r);

/// Rising factorial d (d+1) ... (d+k-1).
BigInt rising_factorial(std::uint64_t d, unsigned k);

BigInt factorial(unsigned k);

}  // namespace stabent

#endif
