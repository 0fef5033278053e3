// Copyright 2026 The waring-decomp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "waring/errors.hpp"

namespace waring {

/// Arbitrary precision signed integer.
using BigInt = mpz_class;

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator (zero is 0/1).
using BigRat = mpq_class;

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);  // 0 when k < 0 or k > n or n < 0
BigInt pow(const BigInt& base, unsigned long e);
BigRat pow(const BigRat& base, long e);

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce.
BigRat ratio(const BigInt& num, const BigInt& den);  // negative e inverts; 0^-k throws

/// Parses "p", "-p" or "p/q" into a canonical rational. Whitespace around the
/// string is ignored. Throws ParseError on malformed text or zero denominator.
BigRat parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const BigRat& q);
std::string to_string(const BigInt& z);

inline bool is_zero(const BigInt& z) { return sgn(z) == 0; }
inline bool is_zero(const BigRat& q) { return sgn(q) == 0; }

}  // namespace waring
