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

#include "waring/form_decomp.hpp"

#include <set>
#include <string>

namespace waring {

std::vector<RationalTerm> FormDecomposition::as_terms() const {
  std::vector<RationalTerm> out;
  out.reserve(terms.size());
  for (const auto& [form, lambda] : terms) out.push_back(RationalTerm{lambda, form, {}, {}, {}});
  return out;
}

std::vector<BigRat> canonical_form(std::vector<BigRat> form, BigRat& lambda, int d) {
  for (const auto& c : form) {
    if (sgn(c) == 0) continue;
    if (c == 1) return form;
    const BigRat lead = c;
    for (auto& x : form) x /= lead;
    // lambda (lead L')^d = (lambda lead^d) L'^d
    lambda *= pow(lead, d);
    return form;
  }
  throw PreconditionError("zero linear form has no canonical scaling");
}

namespace {

void check_form(const SparsePoly<BigRat>& f) {
  if (f.is_zero()) throw PreconditionError("cannot decompose the zero form");
  if (!f.is_homogeneous())
    throw PreconditionError("form is not homogeneous; homogenize it first");
  if (f.total_degree() < 1) throw PreconditionError("form must have degree >= 1");
}

}  // namespace

BigRat default_form_parameter(const SparsePoly<BigRat>& f) {
  check_form(f);
  std::vector<TPoly> scales;
  for (const auto& [e, c] : f.terms()) scales.push_back(scale_D(ExponentVector(e)));
  for (long q = 2;; ++q) {
    bool good = true;
    for (const auto& D : scales)
      if (sgn(D.eval(BigRat(q))) == 0) {
        good = false;
        break;
      }
    if (good) return BigRat(q);
  }
}

FormDecomposition decompose_form(const SparsePoly<BigRat>& f, const std::optional<BigRat>& q) {
  check_form(f);
  const BigRat t = q ? *q : default_form_parameter(f);
  const int D = f.total_degree();

  std::string offending;
  for (const auto& [e, c] : f.terms()) {
    if (sgn(scale_D(ExponentVector(e)).eval(t)) == 0)
      offending += (offending.empty() ? "" : " ") + std::string("(") + ExponentVector(e).to_string() + ")";
  }
  if (!offending.empty())
    throw DegenerateParameterError("t = " + to_string(t) + " is a root of D_a for monomials " + offending);

  FormDecomposition out;
  out.degree = D;
  out.arity = f.arity();
  out.q = t;
  for (const auto& [e, c] : f.terms()) {
    const RationalDecomposition part = specialize(decompose(ExponentVector(e)), t);
    for (const auto& term : part.terms) {
      BigRat lambda = c * term.lambda;
      auto key = canonical_form(term.form, lambda, D);
      out.terms[std::move(key)] += lambda;
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (sgn(it->second) == 0) {
      it = out.terms.erase(it);
      ++out.cancelled;
    } else {
      ++it;
    }
  }
  return out;
}

SparsePoly<BigRat> general_form(int n, int D) {
  if (n < 0 || D < 0) throw PreconditionError("general form needs n >= 0 and D >= 0");
  SparsePoly<BigRat> f(static_cast<std::size_t>(n) + 1);
  for_each_composition(D, n + 1, [&](const std::vector<int>& b, const BigInt&) { f.add_term(b, 1); });
  return f;
}

namespace {

long floor_half(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

BigInt K_count(int n, int D) {
  if (n < 0 || D < 1) throw PreconditionError("K_count needs n >= 0 and D >= 1");
  BigInt total = 0;
  for (long r = 1; r <= n + 1; ++r) {
    const long half = floor_half(D - r);
    BigInt classes = binomial(half + r, r) - binomial(half, r);
    total += classes * pow(BigInt(2), static_cast<unsigned long>(r - 1)) * binomial(n + 1, r);
  }
  return total;
}

BigInt K_count_enumerated(int n, int D, const BigRat& q) {
  if (n < 0 || D < 1) throw PreconditionError("K_count_enumerated needs n >= 0 and D >= 1");
  std::set<std::vector<BigRat>> forms;
  for_each_composition(D, n + 1, [&](const std::vector<int>& b, const BigInt&) {
    const ExponentVector a(b);
    if (sgn(scale_D(a).eval(q)) == 0)
      throw DegenerateParameterError("t = " + to_string(q) + " is a root of D_a for (" + a.to_string() + ")");
    for (const auto& term : decompose(a).terms) {
      BigRat unused = 1;
      forms.insert(canonical_form(term.form.at(q), unused, D));
    }
  });
  return BigInt(static_cast<unsigned long>(forms.size()));
}

BigInt F_count(int n, int D) { return count_primitive(n, D); }

SparsePoly<BigRat> homogenize(const SparsePoly<BigRat>& p, std::size_t slot) {
  if (slot > p.arity()) throw PreconditionError("homogenizing slot out of range");
  SparsePoly<BigRat> out(p.arity() + 1);
  const int deg = p.total_degree();
  for (const auto& [e, c] : p.terms()) {
    Exponents h = e;
    h.insert(h.begin() + static_cast<std::ptrdiff_t>(slot), deg - exponent_degree(e));
    out.add_term(h, c);
  }
  return out;
}

SparsePoly<BigRat> dehomogenize(const SparsePoly<BigRat>& p, std::size_t slot) {
  if (p.arity() == 0 || slot >= p.arity()) throw PreconditionError("dehomogenizing slot out of range");
  SparsePoly<BigRat> out(p.arity() - 1);
  for (const auto& [e, c] : p.terms()) {
    Exponents h = e;
    h.erase(h.begin() + static_cast<std::ptrdiff_t>(slot));
    out.add_term(h, c);
  }
  return out;
}

}  // namespace waring
