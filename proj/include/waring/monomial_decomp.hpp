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

// Parametrized Waring decompositions of a single monomial.
//
// For a = (a_0, ..., a_n) with d = |a| the construction gives
//
//   D_a * X^a = sum over (A, k, s) of C_{A,k,s} * l_{A,k,s}^d
//
// where l_{A,k,s} = sum_{i not in A} (-1)^{s_i} t^{k_i} X_i and every
// coefficient is a polynomial in t with integer coefficients. The reduced
// mode keeps one representative per class of forms that differ by a power of
// t, merging their coefficients.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waring/combinatorics.hpp"
#include "waring/numeric.hpp"
#include "waring/tpoly.hpp"
#include "waring/trat.hpp"

namespace waring {

enum class Mode {
  kReduced,  // min k_i = 0 representatives with shift-merged coefficients
  kFull,     // every k in K_A
};

std::string_view to_string(Mode mode);
/// "reduced" or "full"; throws ParseError otherwise.
Mode parse_mode(std::string_view text);

/// l = sum over the support of (-1)^{s_i} t^{k_i} X_i.
class LinearForm {
 public:
  LinearForm(std::size_t arity, IndexSet support, std::vector<int> k, std::vector<int> s);

  std::size_t arity() const { return arity_; }
  const IndexSet& support() const { return support_; }
  const std::vector<int>& k() const { return k_; }
  const std::vector<int>& s() const { return s_; }

  /// Coefficient of each variable as a polynomial in t (zero off the support).
  std::vector<TPoly> coefficients() const;
  /// Coefficients after substituting t = q.
  std::vector<BigRat> at(const BigRat& q) const;

  /// e.g. "X0-t*X1+t^2*X2".
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::size_t arity_;
  IndexSet support_;
  std::vector<int> k_;
  std::vector<int> s_;
};

/// Polynomial in y over Z[t]; coefficients indexed by the power of y.
struct FPoly {
  std::vector<TPoly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// c(y^k, F); zero when k is out of range.
  TPoly coeff(int k) const;
  TPoly eval(const TPoly& y) const;
};

/// F_i(y) = prod_{j=1}^{m_i} (y - t^{a_i - 2j}), or 1 when m_i <= 0.
FPoly f_poly(const ExponentVector& a, std::size_t i);

/// D_a = (-1)^{|Z|} 2^n multinomial(a) prod_{i not in Z} F_i(t^{a_i}).
TPoly scale_D(const ExponentVector& a);

/// C_{A,k,s}; k and s are indexed by the complement of A. Throws
/// PreconditionError on inconsistent index data.
TPoly coeff_C(const ExponentVector& a, const IndexSet& A, const std::vector<int>& k,
              const std::vector<int>& s);

/// sum_{j=0}^{min(m_i - k_i)} t^{d j} C_{A, k + j, s}; requires min k_i = 0.
TPoly coeff_Cbar(const ExponentVector& a, const IndexSet& A, const std::vector<int>& k,
                 const std::vector<int>& s);

struct DecompTerm {
  IndexSet A;
  std::vector<int> k;
  std::vector<int> s;
  LinearForm form;
  TPoly coeff;
};

/// D * X^a = sum coeff_i * form_i^d with undivided integer-polynomial
/// coefficients, in canonical (A, k, s) order.
struct SymbolicDecomposition {
  ExponentVector a;
  Mode mode;
  TPoly D;
  std::vector<DecompTerm> terms;
  std::size_t dropped = 0;  // zero-coefficient cells; expected to stay 0

  /// coeff_i / D in lowest terms.
  TRat divided_coefficient(std::size_t i) const;
};

/// Throws PreconditionError when every exponent is zero.
SymbolicDecomposition decompose(const ExponentVector& a, Mode mode = Mode::kReduced);

/// Number of summands predicted by counting K_A x S_A per A.
BigInt summand_count_closed(const ExponentVector& a, Mode mode = Mode::kReduced);

struct RationalTerm {
  BigRat lambda;
  std::vector<BigRat> form;  // coefficient of each variable
  // provenance for decompositions built from (A, k, s); empty otherwise
  IndexSet A;
  std::vector<int> k;
  std::vector<int> s;
};

/// X^a = sum lambda_i L_i^d over the rationals.
struct RationalDecomposition {
  ExponentVector a;
  std::optional<BigRat> q;  // the value of t, if any
  std::vector<RationalTerm> terms;
};

/// Substitutes t = q and divides by D(q). Terms whose lambda vanishes are
/// dropped. Throws DegenerateParameterError when D(q) = 0.
RationalDecomposition specialize(const SymbolicDecomposition& dec, const BigRat& q);

/// Smallest integer q >= 2 with D_a(q) != 0.
BigRat default_parameter(const ExponentVector& a);

/// Renders a linear form from per-variable coefficient strings, skipping "0".
std::string format_linear_form(const std::vector<std::string>& coeffs);
std::string format_linear_form(const std::vector<BigRat>& coeffs);

}  // namespace waring
