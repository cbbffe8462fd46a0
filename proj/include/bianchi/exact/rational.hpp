// Copyright 2026 The Bianchi Quintic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIANCHI_EXACT_RATIONAL_HPP
#define BIANCHI_EXACT_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bianchi::exact {

// Arbitrary-precision rationals. GMP keeps every value canonical
// (gcd(num, den) = 1, den > 0, zero is 0/1) as long as values are built
// through the helpers below or through mpq_class arithmetic.
using BigInteger = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(std::int64_t num, std::int64_t den = 1);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const BigRational& x);

// Accepts "p", "p/q" and plain decimals like "-0.25". Throws ParseError.
BigRational parse_rational(std::string_view text);

bool is_integer(const BigRational& x);

// Floor and ceiling of a rational, as machine integers. The exponent
// arithmetic in this project stays far below 2^62.
std::int64_t floor_to_int(const BigRational& x);
std::int64_t ceil_to_int(const BigRational& x);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Denominator of x as a machine integer.
std::int64_t denominator64(const BigRational& x);
std::int64_t numerator64(const BigRational& x);

double to_double(const BigRational& x);

}  // namespace bianchi::exact

#endif  // BIANCHI_EXACT_RATIONAL_HPP
