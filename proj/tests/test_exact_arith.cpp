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

#include <doctest.h>

#include <vector>

#include "test_support.hpp"
#include "waring/errors.hpp"
#include "waring/numeric.hpp"
#include "waring/sparse_poly.hpp"
#include "waring/tpoly.hpp"
#include "waring/trat.hpp"

using namespace waring;
using namespace waring::testing;

namespace {

TPoly tp(std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return TPoly(std::move(v));
}

// Monic gcd over Q[t] by the classical Euclidean algorithm.
using QPoly = std::vector<BigRat>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly qmod(QPoly a, const QPoly& b) {
  while (a.size() >= b.size()) {
    const BigRat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly monic_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = qmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const BigRat lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

QPoly to_q(const TPoly& p) { return QPoly(p.coefficients().begin(), p.coefficients().end()); }

QPoly monic(const TPoly& p) { return monic_gcd(to_q(p), {}); }

}  // namespace

TEST_SUITE("exact-arith") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == BigRat(1, 2));
    CHECK(parse_rational("-4/2") == BigRat(-2));
    CHECK(parse_rational(" 7 ") == BigRat(7));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("12/4")) == "3");
    CHECK(to_string(parse_rational("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_integer("2/3"), ParseError);
  }

  TEST_CASE("factorial, binomial, pow") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-1, 0) == 0);
    for (long n = 0; n <= 30; ++n)
      for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) * fact(k) * fact(n - k) == fact(n));
    CHECK(pow(BigInt(2), 100) == BigInt("1267650600228229401496703205376"));
    CHECK(pow(BigRat(2, 3), -2) == BigRat(9, 4));
    CHECK(pow(BigRat(5), 0) == 1);
    CHECK(to_string(ratio(BigInt(-474), BigInt(168))) == "-79/28");
    CHECK(ratio(BigInt(6), BigInt(-4)) == BigRat(-3, 2));
    CHECK_THROWS_AS(ratio(BigInt(1), BigInt(0)), DivisionByZeroError);
    CHECK_THROWS(pow(BigRat(0), -1));
  }

  TEST_CASE("tpoly_eval examples") {
    CHECK(tpoly_eval(tp({-1, 0, 1}), BigRat(2)) == 3);
    CHECK(tpoly_eval(TPoly(), BigRat(7, 3)) == 0);
    const TPoly D = tp({0, 0, 0, 5040, 0, -10080, 0, 5040});
    CHECK(D.to_string() == "5040t^7-10080t^5+5040t^3");
    CHECK(tpoly_eval(D, BigRat(2)) == 362880);
  }

  TEST_CASE("tpoly arithmetic examples") {
    CHECK(tp({-1, 1}) * tp({1, 1}) == tp({-1, 0, 1}));
    CHECK((tp({-1, 0, 1}) + tp({1, 0, -1})).is_zero());
    CHECK(TPoly().degree() == -1);
    CHECK(tp({0, 0, 0}).is_zero());
    CHECK(tp({1, -2, 0, 3}).to_string() == "3t^3-2t+1");
    CHECK(tp({0, -1}).to_string() == "-t");
    CHECK(TPoly().to_string() == "0");
    CHECK(pow(tp({1, 1}), 3) == tp({1, 3, 3, 1}));
    CHECK(tp({1, 1}).shifted(2) == tp({0, 0, 1, 1}));
    CHECK(tp({0, 1}).compose(tp({1, 1})) == tp({1, 1}));
    CHECK(tp({4, 6}).content() == 2);
    CHECK(tp({-4, -6}).primitive_part() == tp({2, 3}));
  }

  TEST_CASE("tpoly_gcd agrees with Euclid over Q") {
    // t^3 - t and t^2 - 1 share t^2 - 1
    CHECK(tpoly_gcd(tp({0, -1, 0, 1}), tp({-1, 0, 1})) == tp({-1, 0, 1}));
    CHECK(tpoly_gcd(TPoly(), TPoly()).is_zero());
    CHECK(tpoly_gcd(tp({0, -3}), TPoly()) == tp({0, 3}));
    CHECK(tpoly_gcd(tp({0, 4}), tp({0, 6})) == tp({0, 2}));
    for (int trial = 0; trial < 200; ++trial) {
      const TPoly common = random_tpoly(2, 5);
      const TPoly a = random_tpoly(4, 9) * common;
      const TPoly b = random_tpoly(4, 9) * common;
      const TPoly g = tpoly_gcd(a, b);
      CHECK(monic(g) == monic_gcd(to_q(a), to_q(b)));
      if (!g.is_zero()) {
        CHECK(sgn(g.leading()) > 0);
        // the integer part of the gcd is the gcd of the contents
        CHECK(g.content() == gcd(a.content(), b.content()));
      }
    }
  }

  TEST_CASE("divide_exact and pseudo_remainder") {
    CHECK(divide_exact(tp({-1, 0, 1}), tp({-1, 1})) == tp({1, 1}));
    CHECK_THROWS_AS(divide_exact(tp({1, 0, 1}), tp({-1, 1})), PreconditionError);
    CHECK_THROWS_AS(divide_exact(tp({1}), TPoly()), DivisionByZeroError);
    for (int trial = 0; trial < 100; ++trial) {
      const TPoly a = random_tpoly(6, 9);
      const TPoly b = random_tpoly(3, 9);
      if (b.is_zero()) continue;
      CHECK(divide_exact(a * b, b) == a);
      // over Q, prem(a, b) is a nonzero constant multiple of a mod b
      const QPoly r = to_q(pseudo_remainder(a, b));
      const QPoly expected = qmod(to_q(a), to_q(b));
      REQUIRE(r.size() == expected.size());
      CHECK(static_cast<int>(r.size()) - 1 < b.degree());
      for (std::size_t i = 0; i < r.size(); ++i) CHECK(BigRat(r[i] * expected.back()) == BigRat(expected[i] * r.back()));
    }
  }

  TEST_CASE("trat_reduce examples and idempotence") {
    const TRat r = trat_reduce(tp({0, -1, 1}), tp({-1, 0, 1}));
    CHECK(r.num() == tp({0, 1}));
    CHECK(r.den() == tp({1, 1}));
    CHECK(r.to_string() == "(t)/(t+1)");
    const TRat s = trat_reduce(tp({2, 4}), tp({-6}));
    CHECK(s.num() == tp({-1, -2}));
    CHECK(s.den() == tp({3}));
    CHECK_THROWS_AS(trat_reduce(tp({1}), TPoly()), DivisionByZeroError);
    CHECK(trat_reduce(TPoly(), tp({5, 1})) == TRat());
    CHECK_THROWS_AS(r.eval(BigRat(-1)), DegenerateParameterError);
    CHECK(r.eval(BigRat(2)) == BigRat(2, 3));
    for (int trial = 0; trial < 200; ++trial) {
      const TPoly n = random_tpoly(4, 9);
      TPoly d = random_tpoly(4, 9);
      if (d.is_zero()) d = tp({1});
      const TRat x = trat_reduce(n, d);
      CHECK(trat_reduce(x.num(), x.den()) == x);
      if (!x.is_zero()) CHECK(tpoly_gcd(x.num(), x.den()).degree() == 0);
      CHECK(sgn(x.den().leading()) > 0);
    }
  }

  TEST_CASE("trat field axioms") {
    for (int trial = 0; trial < 60; ++trial) {
      auto make = [] {
        TPoly d = random_tpoly(3, 6);
        if (d.is_zero()) d = tp({1});
        return trat_reduce(random_tpoly(3, 6), d);
      };
      const TRat a = make(), b = make(), c = make();
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == TRat());
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }

  TEST_CASE("ring axioms on random BigRat and TPoly") {
    for (int trial = 0; trial < 200; ++trial) {
      const BigRat x = rand_q(), y = rand_q(), z = rand_q();
      CHECK(BigRat((x + y) + z) == BigRat(x + (y + z)));
      CHECK(BigRat(x * (y + z)) == BigRat(x * y + x * z));
      CHECK(BigRat(x * y) == BigRat(y * x));
      const TPoly a = random_tpoly(), b = random_tpoly(), c = random_tpoly();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == TPoly());
      const BigRat q = rand_q();
      CHECK(tpoly_eval(a * b, q) == BigRat(tpoly_eval(a, q) * tpoly_eval(b, q)));
      CHECK(tpoly_eval(a + b, q) == BigRat(tpoly_eval(a, q) + tpoly_eval(b, q)));
      TPoly acc = a;
      acc.add_scaled_shifted(b, BigInt(-3), 2);
      CHECK(acc == a + b.shifted(2) * BigInt(-3));
    }
  }

  TEST_CASE("ring axioms on random SparsePoly") {
    for (int trial = 0; trial < 60; ++trial) {
      const auto p = random_spoly(3, 3, 4), q = random_spoly(3, 3, 4), r = random_spoly(3, 3, 4);
      CHECK((p + q) + r == p + (q + r));
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p * q == q * p);
      CHECK((p - p).is_zero());
      SparsePoly<TPoly> a(2), b(2), c(2);
      for (int i = 0; i < 3; ++i) {
        a.add_term({static_cast<int>(uniform(0, 2)), static_cast<int>(uniform(0, 2))}, random_tpoly(2, 5));
        b.add_term({static_cast<int>(uniform(0, 2)), static_cast<int>(uniform(0, 2))}, random_tpoly(2, 5));
        c.add_term({static_cast<int>(uniform(0, 2)), static_cast<int>(uniform(0, 2))}, random_tpoly(2, 5));
      }
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }

  TEST_CASE("spoly_pow examples") {
    using P = SparsePoly<BigRat>;
    const P x0 = P::variable(2, 0), x1 = P::variable(2, 1);
    const P sq = spoly_pow(x0 + x1, 2);
    CHECK(sq.size() == 3);
    CHECK(sq.coeff({2, 0}) == 1);
    CHECK(sq.coeff({1, 1}) == 2);
    CHECK(sq.coeff({0, 2}) == 1);

    using T = SparsePoly<TPoly>;
    const T form = T::linear({TPoly(1), -TPoly::t()});
    const T tsq = spoly_pow(form, 2);
    CHECK(tsq.coeff({2, 0}) == TPoly(1));
    CHECK(tsq.coeff({1, 1}) == tp({0, -2}));
    CHECK(tsq.coeff({0, 2}) == tp({0, 0, 1}));

    const P l3 = P::linear({BigRat(1), BigRat(1), BigRat(1)});
    const P ninth = spoly_pow(l3, 9);
    CHECK(ninth.size() == 55);
    CHECK(ninth.coeff({4, 3, 2}) == fact(9) / (fact(4) * fact(3) * fact(2)));
    CHECK(ninth.coeff({4, 3, 2}) == 1260);
    CHECK(spoly_pow(P(2), 0) == P::constant(2, BigRat(1)));
  }

  TEST_CASE("spoly_pow equals repeated multiplication") {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t arity = static_cast<std::size_t>(uniform(1, 3));
      std::vector<BigRat> coeffs(arity);
      for (auto& c : coeffs) c = rand_q(5);
      const auto l = SparsePoly<BigRat>::linear(coeffs);
      const int d = static_cast<int>(uniform(0, 12));
      CHECK(spoly_pow(l, d) == spoly_pow_naive(l, d));
    }
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = random_spoly(2, 2, 3, 4);
      const int d = static_cast<int>(uniform(0, 6));
      CHECK(spoly_pow(p, d) == spoly_pow_naive(p, d));
    }
  }

  TEST_CASE("sparse poly bookkeeping") {
    SparsePoly<BigRat> p(2);
    p.add_term({1, 0}, BigRat(2));
    p.add_term({1, 0}, BigRat(-2));
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.add_term({1}, BigRat(1)), PreconditionError);
    CHECK_THROWS_AS(p.add_term({-1, 0}, BigRat(1)), PreconditionError);
    p.add_term({2, 1}, BigRat(1, 2));
    p.add_term({0, 0}, BigRat(3));
    CHECK(p.total_degree() == 3);
    CHECK_FALSE(p.is_homogeneous());
    CHECK(p.to_string() == "(3) + (1/2)*X0^2*X1");
    CHECK_THROWS_AS(p + SparsePoly<BigRat>(3), PreconditionError);
  }
}
