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

// Expansion-based checks. Every power of a linear form is expanded by the
// multinomial theorem and summed exactly; nothing here reuses the coefficient
// formulas of monomial_decomp.

#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "waring/monomial_decomp.hpp"
#include "waring/sparse_poly.hpp"

namespace waring {

template <class S>
struct VerifyReport {
  bool ok = false;
  SparsePoly<S> lhs;  // the target, e.g. D_a * X^a
  SparsePoly<S> rhs;  // the expanded sum of powers
  std::optional<Exponents> first_mismatch;  // lexicographically first differing monomial
};

/// First exponent vector (in lexicographic order) where a and b differ.
template <class S>
std::optional<Exponents> first_difference(const SparsePoly<S>& a, const SparsePoly<S>& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) return ia->first;
    if (ia == a.terms().end() || ib->first < ia->first) return ib->first;
    if (!(ia->second == ib->second)) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

template <class S>
VerifyReport<S> compare(SparsePoly<S> lhs, SparsePoly<S> rhs) {
  VerifyReport<S> r;
  r.first_mismatch = first_difference(lhs, rhs);
  r.ok = !r.first_mismatch.has_value();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

/// sum_i coeff_i * form_i^d in Z[t][X].
SparsePoly<TPoly> expand_symbolic(const SymbolicDecomposition& dec, bool parallel = false);

/// sum_i lambda_i * L_i^d over the rationals, for forms with `arity` variables.
SparsePoly<BigRat> expand_rational(std::span<const RationalTerm> terms, int d, std::size_t arity,
                                   bool parallel = false);

/// Checks D_a * X^a == sum coeff_i * form_i^d.
VerifyReport<TPoly> verify_symbolic(const SymbolicDecomposition& dec, bool parallel = false);

/// Checks X^a == sum lambda_i * L_i^d.
VerifyReport<BigRat> verify_specialized(const RationalDecomposition& rdec, bool parallel = false);

/// X^a = 1/D! sum_{0 <= p <= a, p != 0} (-1)^{D - |p|} prod binom(a_i, p_i) (p . X)^D.
/// The all-zero p is skipped because its form vanishes.
RationalDecomposition naive_decompose(const ExponentVector& a);

}  // namespace waring
