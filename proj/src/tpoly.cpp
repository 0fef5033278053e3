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

#include "waring/tpoly.hpp"

#include <algorithm>
#include <utility>

namespace waring {

TPoly::TPoly(const BigInt& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

TPoly::TPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::monomial(const BigInt& c, int k) {
  if (k < 0) throw PreconditionError("negative power of t");
  TPoly p;
  if (sgn(c) == 0) return p;
  p.coeffs_.resize(static_cast<std::size_t>(k) + 1);
  p.coeffs_.back() = c;
  return p;
}

void TPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt TPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& TPoly::leading() const {
  if (is_zero()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt TPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

TPoly TPoly::primitive_part() const {
  if (is_zero()) return {};
  TPoly p = divided_by(content());
  if (sgn(p.leading()) < 0) p *= BigInt(-1);
  return p;
}

TPoly TPoly::divided_by(const BigInt& c) const {
  if (sgn(c) == 0) throw DivisionByZeroError("polynomial divided by zero");
  TPoly r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw PreconditionError("coefficient not divisible by " + c.get_str());
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

TPoly& TPoly::operator+=(const TPoly& rhs) {
  add_scaled_shifted(rhs, 1, 0);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& rhs) {
  add_scaled_shifted(rhs, -1, 0);
  return *this;
}

void TPoly::add_scaled_shifted(const TPoly& p, const BigInt& factor, int shift) {
  if (p.is_zero() || sgn(factor) == 0) return;
  const std::size_t need = p.coeffs_.size() + static_cast<std::size_t>(shift);
  if (coeffs_.size() < need) coeffs_.resize(need);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    BigInt& dst = coeffs_[i + static_cast<std::size_t>(shift)];
    mpz_addmul(dst.get_mpz_t(), p.coeffs_[i].get_mpz_t(), factor.get_mpz_t());
  }
  trim();
}

TPoly& TPoly::operator*=(const TPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

TPoly& TPoly::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

TPoly TPoly::shifted(int k) const {
  if (k < 0) throw PreconditionError("negative shift");
  if (is_zero()) return {};
  TPoly r;
  r.coeffs_.resize(static_cast<std::size_t>(k));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

BigRat TPoly::eval(const BigRat& q) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += *it;
  }
  return acc;
}

TPoly TPoly::compose(const TPoly& p) const {
  TPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * p;
    acc += TPoly(*it);
  }
  return acc;
}

std::string TPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (sgn(c) < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ac = a.coefficients();
  auto bc = b.coefficients();
  std::vector<BigInt> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
  }
  return TPoly(std::move(out));
}

TPoly operator*(TPoly a, const BigInt& c) { return a *= c; }
TPoly operator*(const BigInt& c, TPoly a) { return a *= c; }

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

TPoly pow(const TPoly& base, unsigned e) {
  TPoly result(1);
  TPoly b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

TPoly pseudo_remainder(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw DivisionByZeroError("pseudo-remainder by the zero polynomial");
  TPoly r = a;
  const BigInt& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    BigInt lr = r.leading();
    const int shift = r.degree() - b.degree();
    r *= lb;
    r.add_scaled_shifted(b, -lr, shift);
  }
  return r;
}

TPoly tpoly_gcd(const TPoly& a, const TPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  BigInt cont;
  BigInt ca = a.content();
  BigInt cb = b.content();
  mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  TPoly x = a.primitive_part();
  TPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    TPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part() * cont;
}

TPoly divide_exact(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw PreconditionError("polynomial division is not exact");
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  TPoly r = a;
  const BigInt& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const BigInt& lr = r.leading();
    if (!mpz_divisible_p(lr.get_mpz_t(), lb.get_mpz_t()))
      throw PreconditionError("polynomial division is not exact");
    BigInt c;
    mpz_divexact(c.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
    const int shift = r.degree() - b.degree();
    q[static_cast<std::size_t>(shift)] = c;
    r.add_scaled_shifted(b, -c, shift);
  }
  if (!r.is_zero()) throw PreconditionError("polynomial division is not exact");
  return TPoly(std::move(q));
}

}  // namespace waring
