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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waring/numeric.hpp"

namespace waring {

/// Dense univariate polynomial in the parameter t with integer coefficients.
///
/// Coefficients are indexed by the power of t and trailing zeros are always
/// trimmed, so the zero polynomial has no stored coefficients and its degree
/// is kZeroDegree.
class TPoly {
 public:
  static constexpr int kZeroDegree = -1;

  TPoly() = default;
  TPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)
  TPoly(long c) : TPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  explicit TPoly(std::vector<BigInt> coeffs);

  /// c * t^k.
  static TPoly monomial(const BigInt& c, int k);
  static TPoly t() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const BigInt> coefficients() const { return coeffs_; }
  /// Coefficient of t^k; zero outside the stored range.
  BigInt coeff(int k) const;
  const BigInt& leading() const;

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  TPoly primitive_part() const;

  TPoly& operator+=(const TPoly& rhs);
  TPoly& operator-=(const TPoly& rhs);
  TPoly& operator*=(const TPoly& rhs);
  TPoly& operator*=(const BigInt& c);
  TPoly operator-() const;

  /// this += factor * t^shift * p, without temporaries.
  void add_scaled_shifted(const TPoly& p, const BigInt& factor, int shift);
  /// p * t^k.
  TPoly shifted(int k) const;
  /// Divides every coefficient by c; c must divide all of them.
  TPoly divided_by(const BigInt& c) const;

  /// Horner evaluation at a rational point.
  BigRat eval(const BigRat& q) const;
  /// Horner evaluation at another polynomial: this(p(t)).
  TPoly compose(const TPoly& p) const;

  /// Canonical text, descending powers, e.g. "5040t^7-10080t^5+5040t^3".
  std::string to_string(std::string_view var = "t") const;

  friend bool operator==(const TPoly&, const TPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

TPoly operator+(TPoly a, const TPoly& b);
TPoly operator-(TPoly a, const TPoly& b);
TPoly operator*(const TPoly& a, const TPoly& b);
TPoly operator*(TPoly a, const BigInt& c);
TPoly operator*(const BigInt& c, TPoly a);
std::ostream& operator<<(std::ostream& os, const TPoly& p);

TPoly pow(const TPoly& base, unsigned e);

inline BigRat tpoly_eval(const TPoly& p, const BigRat& q) { return p.eval(q); }

/// Greatest common divisor in Z[t], normalized to a positive leading
/// coefficient. gcd(0, 0) = 0.
TPoly tpoly_gcd(const TPoly& a, const TPoly& b);

/// Quotient of an exact division in Z[t]. Throws PreconditionError when b does
/// not divide a, DivisionByZeroError when b is zero.
TPoly divide_exact(const TPoly& a, const TPoly& b);

/// Pseudo-remainder: a multiple of (lc(b)^k a mod b) of degree < deg b.
TPoly pseudo_remainder(const TPoly& a, const TPoly& b);

}  // namespace waring
