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

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "test_support.hpp"
#include "waring/combinatorics.hpp"
#include "waring/errors.hpp"
#include "waring/monomial_decomp.hpp"

using namespace waring;
using namespace waring::testing;

namespace {

TPoly tp(std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return TPoly(std::move(v));
}

const TPoly T = TPoly::t();
const TPoly one_minus_t2 = tp({1, 0, -1});

// Every exponent vector with `vars` entries in [0, amax], not all zero.
std::vector<ExponentVector> sweep(int vars, int amax) {
  std::vector<ExponentVector> out;
  std::vector<int> a(static_cast<std::size_t>(vars), 0);
  for (;;) {
    std::size_t i = 0;
    while (i < a.size() && a[i] == amax) a[i++] = 0;
    if (i == a.size()) break;
    ++a[i];
    out.emplace_back(a);
  }
  return out;
}

}  // namespace

TEST_SUITE("monomial-decomp") {
  TEST_CASE("mode names") {
    CHECK(parse_mode("reduced") == Mode::kReduced);
    CHECK(parse_mode("full") == Mode::kFull);
    CHECK(to_string(Mode::kFull) == "full");
    CHECK_THROWS_AS(parse_mode("other"), ParseError);
  }

  TEST_CASE("linear forms") {
    const LinearForm l(3, {0, 1, 2}, {0, 1, 2}, {0, 1, 0});
    CHECK(l.to_string() == "X0-t*X1+t^2*X2");
    CHECK(l.coefficients() == std::vector<TPoly>{TPoly(1), -T, tp({0, 0, 1})});
    CHECK(l.at(BigRat(2)) == std::vector<BigRat>{BigRat(1), BigRat(-2), BigRat(4)});
    const LinearForm m(3, {1}, {0}, {0});
    CHECK(m.to_string() == "X1");
    CHECK(m.at(BigRat(5)) == std::vector<BigRat>{BigRat(0), BigRat(1), BigRat(0)});
    CHECK(format_linear_form(std::vector<BigRat>{BigRat(1), BigRat(-1, 2), BigRat(0)}) == "X0-1/2*X1");
  }

  TEST_CASE("F polynomials of X0^4*X1^3*X2^2") {
    const ExponentVector a({4, 3, 2});
    const FPoly f0 = f_poly(a, 0), f1 = f_poly(a, 1), f2 = f_poly(a, 2);
    CHECK(f0.coeffs == std::vector<TPoly>{tp({0, 0, -1}), TPoly(1)});
    CHECK(f1.coeffs == std::vector<TPoly>{-T, TPoly(1)});
    CHECK(f2.coeffs == std::vector<TPoly>{TPoly(1)});
    CHECK(f0.coeff(0) == tp({0, 0, -1}));
    CHECK(f0.coeff(5).is_zero());
    CHECK(f0.eval(pow(T, 4)) == tp({0, 0, -1, 0, 1}));
    // (y - t^3)(y - t) for a single exponent 5
    CHECK(f_poly(ExponentVector({5}), 0).coeffs == std::vector<TPoly>{tp({0, 0, 0, 0, 1}), tp({0, -1, 0, -1}), TPoly(1)});
  }

  TEST_CASE("scale_D examples") {
    CHECK(scale_D(ExponentVector({4, 3, 2})).to_string() == "5040t^7-10080t^5+5040t^3");
    CHECK(scale_D(ExponentVector({4, 3, 2})) == BigInt(5040) * pow(T, 3) * pow(tp({-1, 0, 1}), 2));
    CHECK(scale_D(ExponentVector({1, 1})) == TPoly(4));
    CHECK(scale_D(ExponentVector({5})) == tp({0, 0, 0, 0, 1, 0, -1, 0, -1, 0, 1}));
    // a zero exponent flips the sign and doubles through 2^n
    CHECK(scale_D(ExponentVector({1, 0})) == TPoly(-2));
  }

  TEST_CASE("C coefficients match the worked tables") {
    const ExponentVector a({4, 3, 2});
    // A = {}: rows k, columns s = 000, 001, 010, 011
    const std::vector<std::vector<int>> K0{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
    const std::vector<TPoly> row0{pow(T, 3), -pow(T, 2), -T, TPoly(1)};
    const std::vector<std::vector<int>> S0{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}};
    const std::vector<int> col_sign0{1, 1, -1, -1};
    for (std::size_t r = 0; r < K0.size(); ++r)
      for (std::size_t c = 0; c < S0.size(); ++c)
        CHECK(coeff_C(a, {}, K0[r], S0[c]) == row0[r] * BigInt(col_sign0[c]));
    CHECK(coeff_C(a, {}, {0, 0, 0}, {0, 0, 0}) == pow(T, 3));
    CHECK(coeff_C(a, {}, {1, 1, 0}, {0, 1, 0}) == TPoly(-1));

    // A = {0}: prefactor -2(1 - t^2)
    const TPoly p0 = BigInt(-2) * one_minus_t2;
    CHECK(coeff_C(a, {0}, {0, 0}, {0, 0}) == p0 * -T);
    CHECK(coeff_C(a, {0}, {0, 0}, {0, 0}) == tp({0, 2, 0, -2}));
    CHECK(coeff_C(a, {0}, {0, 0}, {0, 1}) == p0 * -T);
    CHECK(coeff_C(a, {0}, {1, 0}, {0, 0}) == p0);
    CHECK(coeff_C(a, {0}, {1, 0}, {0, 1}) == p0);

    // A = {2}: prefactor -2
    const std::vector<std::vector<int>> K2{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const std::vector<TPoly> row2{pow(T, 3), -pow(T, 2), -T, TPoly(1)};
    for (std::size_t r = 0; r < K2.size(); ++r) {
      CHECK(coeff_C(a, {2}, K2[r], {0, 0}) == BigInt(-2) * row2[r]);
      CHECK(coeff_C(a, {2}, K2[r], {0, 1}) == BigInt(2) * row2[r]);
    }

    // A = {0, 2}: prefactor 4(1 - t^2)
    CHECK(coeff_C(a, {0, 2}, {0}, {0}) == BigInt(4) * one_minus_t2 * -T);
    CHECK(coeff_C(a, {0, 2}, {1}, {0}) == BigInt(4) * one_minus_t2);

    CHECK_THROWS_AS(coeff_C(a, {1}, {0, 0}, {0, 0}), PreconditionError);  // 1 is odd
    CHECK_THROWS_AS(coeff_C(a, {}, {0, 0}, {0, 0}), PreconditionError);   // wrong length
    CHECK_THROWS_AS(coeff_C(a, {}, {2, 0, 0}, {0, 0, 0}), PreconditionError);  // k_0 > m_0
  }

  TEST_CASE("shift-merged coefficients") {
    const ExponentVector a({4, 3, 2});
    // X0 +- X1 absorbs t X0 +- t X1
    const TPoly c2 = coeff_Cbar(a, {2}, {0, 0}, {0, 0});
    CHECK(c2 == BigInt(-2) * (pow(T, 3) + pow(T, 9)));
    CHECK(c2.to_string() == "-2t^9-2t^3");
    CHECK(coeff_Cbar(a, {2}, {0, 0}, {0, 1}) == BigInt(2) * (pow(T, 3) + pow(T, 9)));
    const TPoly c02 = coeff_Cbar(a, {0, 2}, {0}, {0});
    CHECK(c02 == BigInt(4) * one_minus_t2 * (pow(T, 9) - T));
    CHECK(c02.to_string() == "-4t^11+4t^9+4t^3-4t");
    // a single variable collapses to D_a
    CHECK(coeff_Cbar(ExponentVector({5}), {}, {0}, {0}) == scale_D(ExponentVector({5})));
    CHECK_THROWS_AS(coeff_Cbar(a, {2}, {1, 1}, {0, 0}), PreconditionError);  // min k != 0
  }

  TEST_CASE("golden decomposition") {
    const auto dec = decompose(ExponentVector({4, 3, 2}));
    CHECK(dec.terms.size() == 27);
    CHECK(dec.dropped == 0);
    CHECK(dec.D.to_string() == "5040t^7-10080t^5+5040t^3");
    CHECK(dec.terms.front().form.to_string() == "X0+X1+X2");
    CHECK(dec.terms.front().coeff == pow(T, 3));
    CHECK(dec.terms.back().A == IndexSet{0, 2});
    CHECK(dec.terms.back().form.to_string() == "X1");
    CHECK(dec.terms.back().coeff.to_string() == "-4t^11+4t^9+4t^3-4t");
    CHECK(dec.divided_coefficient(0).to_string() == "(1)/(5040t^4-10080t^2+5040)");
    std::size_t per_A[4] = {0, 0, 0, 0};
    for (const auto& term : dec.terms) {
      if (term.A.empty()) ++per_A[0];
      else if (term.A == IndexSet{0}) ++per_A[1];
      else if (term.A == IndexSet{2}) ++per_A[2];
      else ++per_A[3];
    }
    // 4 x 4, 2 x 2, 3 x 2, 1 x 1
    CHECK(per_A[0] == 16);
    CHECK(per_A[1] == 4);
    CHECK(per_A[2] == 6);
    CHECK(per_A[3] == 1);
    const auto full = decompose(ExponentVector({4, 3, 2}), Mode::kFull);
    CHECK(full.terms.size() == 16 + 4 + 8 + 2);
  }

  TEST_CASE("small decompositions") {
    const auto xy = decompose(ExponentVector({1, 1}));
    REQUIRE(xy.terms.size() == 2);
    CHECK(xy.D == TPoly(4));
    CHECK(xy.terms[0].form.to_string() == "X0+X1");
    CHECK(xy.terms[0].coeff == TPoly(1));
    CHECK(xy.terms[1].form.to_string() == "X0-X1");
    CHECK(xy.terms[1].coeff == TPoly(-1));
    const auto x7 = decompose(ExponentVector({7}));
    REQUIRE(x7.terms.size() == 1);
    CHECK(x7.terms[0].form.to_string() == "X0");
    CHECK(x7.terms[0].coeff == x7.D);
    CHECK_THROWS_AS(decompose(ExponentVector({0, 0})), PreconditionError);
  }

  TEST_CASE("closed summand counts") {
    CHECK(summand_count_closed(ExponentVector({4, 3, 2})) == 27);
    CHECK(summand_count_closed(ExponentVector({1, 1, 1})) == 4);
    CHECK(summand_count_closed(ExponentVector({2, 2}), Mode::kFull) == 4);
    CHECK(summand_count_closed(ExponentVector({4, 3, 2}), Mode::kFull) == 30);
  }

  TEST_CASE("count identity over a sweep, no dropped terms, zero variables absent") {
    for (int vars = 1; vars <= 5; ++vars) {
      const int amax = 6;
      for (const auto& a : sweep(vars, amax)) {
        CAPTURE(a.to_string());
        BigInt plus = 1, minus = 1, all_plus = 1;
        bool all_even = true;
        for (int x : a.values()) {
          if (x == 0) continue;
          plus *= x + 1;
          minus *= x - 1;
          all_plus *= x + 1;
          all_even = all_even && x % 2 == 0;
        }
        const BigInt reduced_expected = (plus - minus) / 2;
        const BigInt full_expected = all_even ? BigInt((all_plus - 1) / 2) : BigInt(all_plus / 2);
        const auto red = decompose(a, Mode::kReduced);
        const auto full = decompose(a, Mode::kFull);
        CHECK(red.dropped == 0);
        CHECK(full.dropped == 0);
        CHECK(BigInt(static_cast<unsigned long>(red.terms.size())) == reduced_expected);
        CHECK(BigInt(static_cast<unsigned long>(full.terms.size())) == full_expected);
        CHECK(summand_count_closed(a, Mode::kReduced) == reduced_expected);
        CHECK(summand_count_closed(a, Mode::kFull) == full_expected);
        for (const auto& term : red.terms) {
          const auto coeffs = term.form.coefficients();
          for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] == 0) CHECK(coeffs[i].is_zero());
        }
      }
    }
  }

  TEST_CASE("reduced forms are pairwise non-proportional") {
    for (const auto& a : sweep(3, 4)) {
      const auto dec = decompose(a);
      std::vector<std::vector<TPoly>> forms;
      for (const auto& term : dec.terms) forms.push_back(term.form.coefficients());
      for (std::size_t x = 0; x < forms.size(); ++x)
        for (std::size_t y = x + 1; y < forms.size(); ++y) {
          bool proportional = true;
          for (std::size_t i = 0; i < a.size() && proportional; ++i)
            for (std::size_t j = 0; j < a.size() && proportional; ++j)
              proportional = forms[x][i] * forms[y][j] == forms[x][j] * forms[y][i];
          CHECK_FALSE(proportional);
        }
    }
  }

  TEST_CASE("specialization") {
    const auto xy = specialize(decompose(ExponentVector({1, 1})), BigRat(2));
    REQUIRE(xy.terms.size() == 2);
    CHECK(xy.terms[0].lambda == BigRat(1, 4));
    CHECK(xy.terms[1].lambda == BigRat(-1, 4));
    CHECK(xy.terms[1].form == std::vector<BigRat>{BigRat(1), BigRat(-1)});

    const auto dec = decompose(ExponentVector({4, 3, 2}));
    const auto at2 = specialize(dec, BigRat(2));
    CHECK(at2.q == BigRat(2));
    CHECK(at2.terms.front().lambda == BigRat(1, 5040 * 9));
    try {
      specialize(dec, BigRat(1));
      FAIL("expected a degenerate parameter");
    } catch (const DegenerateParameterError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("t = 1") != std::string::npos);
      CHECK(msg.find("5040t^7-10080t^5+5040t^3") != std::string::npos);
    }
    CHECK_THROWS_AS(specialize(dec, BigRat(0)), DegenerateParameterError);
    CHECK_THROWS_AS(specialize(dec, BigRat(-1)), DegenerateParameterError);
  }

  TEST_CASE("specialize commutes with evaluation") {
    for (const auto& a : sweep(3, 3)) {
      const auto dec = decompose(a);
      for (const BigRat q : {BigRat(2), BigRat(3), BigRat(-2), BigRat(7, 2)}) {
        const BigRat Dq = dec.D.eval(q);
        if (sgn(Dq) == 0) continue;
        const auto r = specialize(dec, q);
        REQUIRE(r.terms.size() == dec.terms.size());
        for (std::size_t i = 0; i < r.terms.size(); ++i) {
          CHECK(BigRat(r.terms[i].lambda * Dq) == dec.terms[i].coeff.eval(q));
          CHECK(r.terms[i].form == dec.terms[i].form.at(q));
          CHECK(dec.divided_coefficient(i).eval(q) == r.terms[i].lambda);
        }
      }
    }
  }

  TEST_CASE("default parameter") {
    CHECK(default_parameter(ExponentVector({4, 3, 2})) == 2);
    CHECK(default_parameter(ExponentVector({1, 1})) == 2);
    CHECK(default_parameter(ExponentVector({5})) == 2);
    CHECK(scale_D(ExponentVector({5})).eval(BigRat(2)) == 720);
  }
}
