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

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "waring/monomial_decomp.hpp"
#include "waring/sparse_poly.hpp"

namespace waring {

/// Waring decomposition of a homogeneous form, with proportional linear forms
/// merged. Keys are normalized so the first nonzero coefficient is 1.
struct FormDecomposition {
  int degree = 0;
  std::size_t arity = 0;
  BigRat q;
  std::map<std::vector<BigRat>, BigRat> terms;  // canonical form -> lambda
  std::size_t cancelled = 0;  // merged forms whose lambda summed to zero (removed)

  std::vector<RationalTerm> as_terms() const;
};

/// Scales `form` so its first nonzero entry is 1 and compensates `lambda` by
/// the d-th power of the removed factor. Throws PreconditionError on a zero form.
std::vector<BigRat> canonical_form(std::vector<BigRat> form, BigRat& lambda, int d);

/// Smallest integer q >= 2 with D_a(q) != 0 for every monomial a of f.
BigRat default_form_parameter(const SparsePoly<BigRat>& f);

/// Sums coeff(f, a) * specialize(decompose(a), q) over the monomials of f and
/// merges equal canonical forms. f must be homogeneous of degree >= 1.
/// Throws DegenerateParameterError listing every monomial with D_a(q) = 0.
FormDecomposition decompose_form(const SparsePoly<BigRat>& f,
                                 const std::optional<BigRat>& q = std::nullopt);

/// Every monomial of degree D in n + 1 variables with coefficient 1.
SparsePoly<BigRat> general_form(int n, int D);

/// Closed form for the number of distinct forms needed for a general form of
/// degree D in n + 1 variables.
BigInt K_count(int n, int D);

/// The same number obtained by collecting the distinct canonical linear forms
/// of decompose(a) at t = q over every monomial a of degree D. Counts forms,
/// not surviving terms: in a merged decomposition some lambdas may cancel.
BigInt K_count_enumerated(int n, int D, const BigRat& q);

/// Number of distinct forms used by the naive decomposition of a general form
/// (primitive vectors), by the Moebius closed form.
BigInt F_count(int n, int D);

/// Inserts a fresh variable at position `slot` raising every term to the total
/// degree of p.
SparsePoly<BigRat> homogenize(const SparsePoly<BigRat>& p, std::size_t slot);
/// Sets the variable at `slot` to 1 and removes it.
SparsePoly<BigRat> dehomogenize(const SparsePoly<BigRat>& p, std::size_t slot);

}  // namespace waring
