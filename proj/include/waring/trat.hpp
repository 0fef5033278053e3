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

#include <ostream>
#include <string>

#include "waring/tpoly.hpp"

namespace waring {

/// Reduced rational function num/den in t.
///
/// Canonical form: gcd(num, den) = 1 both as polynomials and in integer
/// content, and den has a positive leading coefficient. Zero is 0/1. Two
/// TRats are equal iff their fields are equal.
class TRat {
 public:
  TRat() : den_(1) {}
  TRat(const TPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  TRat(long c) : num_(c), den_(1) {}          // NOLINT(google-explicit-constructor)

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  TRat& operator+=(const TRat& rhs);
  TRat& operator-=(const TRat& rhs);
  TRat& operator*=(const TRat& rhs);
  TRat& operator/=(const TRat& rhs);
  TRat operator-() const;

  /// Throws DegenerateParameterError when q is a root of the denominator.
  BigRat eval(const BigRat& q) const;

  /// "num" when den == 1, else "(num)/(den)".
  std::string to_string() const;

  friend bool operator==(const TRat&, const TRat&) = default;
  friend TRat trat_reduce(const TPoly& n, const TPoly& d);

 private:
  TPoly num_;
  TPoly den_;
};

/// Builds the canonical TRat n/d. Throws DivisionByZeroError when d is zero.
TRat trat_reduce(const TPoly& n, const TPoly& d);

TRat operator+(TRat a, const TRat& b);
TRat operator-(TRat a, const TRat& b);
TRat operator*(TRat a, const TRat& b);
TRat operator/(TRat a, const TRat& b);
std::ostream& operator<<(std::ostream& os, const TRat& r);

}  // namespace waring
