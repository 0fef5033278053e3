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

#include "waring/trat.hpp"

namespace waring {

TRat trat_reduce(const TPoly& n, const TPoly& d) {
  if (d.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  TRat r;
  if (n.is_zero()) return r;

  TPoly g = tpoly_gcd(n, d).primitive_part();
  TPoly num = divide_exact(n, g);
  TPoly den = divide_exact(d, g);

  BigInt c;
  BigInt cn = num.content();
  BigInt cd = den.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (sgn(den.leading()) < 0) c = -c;
  r.num_ = num.divided_by(c);
  r.den_ = den.divided_by(c);
  return r;
}

TRat& TRat::operator+=(const TRat& rhs) {
  *this = trat_reduce(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

TRat& TRat::operator-=(const TRat& rhs) {
  *this = trat_reduce(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

TRat& TRat::operator*=(const TRat& rhs) {
  *this = trat_reduce(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

TRat& TRat::operator/=(const TRat& rhs) {
  if (rhs.is_zero()) throw DivisionByZeroError("rational function divided by zero");
  *this = trat_reduce(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

TRat TRat::operator-() const {
  TRat r = *this;
  r.num_ = -r.num_;
  return r;
}

BigRat TRat::eval(const BigRat& q) const {
  BigRat d = den_.eval(q);
  if (sgn(d) == 0)
    throw DegenerateParameterError("t = " + waring::to_string(q) + " is a pole of " + to_string());
  return num_.eval(q) / d;
}

std::string TRat::to_string() const {
  if (den_ == TPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

TRat operator+(TRat a, const TRat& b) { return a += b; }
TRat operator-(TRat a, const TRat& b) { return a -= b; }
TRat operator*(TRat a, const TRat& b) { return a *= b; }
TRat operator/(TRat a, const TRat& b) { return a /= b; }
std::ostream& operator<<(std::ostream& os, const TRat& r) { return os << r.to_string(); }

}  // namespace waring
