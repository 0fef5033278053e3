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

#include "waring/numeric.hpp"

#include <cctype>

namespace waring {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRat ratio(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DivisionByZeroError("zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigRat pow(const BigRat& base, long e) {
  if (e < 0) {
    if (sgn(base) == 0) throw DivisionByZeroError("zero raised to a negative power");
    BigRat inv = 1 / base;
    return pow(inv, -e);
  }
  BigRat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(),
             static_cast<unsigned long>(e));
  // powers of coprime numbers stay coprime, so no canonicalize needed
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  if (!valid_integer_text(s)) throw ParseError("not an integer: '" + std::string(text) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

BigRat parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_integer(s));
  BigInt num = parse_integer(s.substr(0, slash));
  std::string_view den_text = trim(s.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("sign in denominator: '" + std::string(text) + "'");
  BigInt den = parse_integer(den_text);
  if (sgn(den) == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return ratio(num, den);
}

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

}  // namespace waring
