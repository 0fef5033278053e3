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

#include "waring/monomial_decomp.hpp"

#include <algorithm>
#include <iostream>
#include <utility>

namespace waring {

std::string_view to_string(Mode mode) { return mode == Mode::kReduced ? "reduced" : "full"; }

Mode parse_mode(std::string_view text) {
  if (text == "reduced") return Mode::kReduced;
  if (text == "full") return Mode::kFull;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected reduced or full)");
}

// ---------------------------------------------------------------------------
// LinearForm

LinearForm::LinearForm(std::size_t arity, IndexSet support, std::vector<int> k, std::vector<int> s)
    : arity_(arity), support_(std::move(support)), k_(std::move(k)), s_(std::move(s)) {
  if (support_.empty()) throw PreconditionError("linear form needs a nonempty support");
  if (k_.size() != support_.size() || s_.size() != support_.size())
    throw PreconditionError("k and s must be indexed by the support");
  for (std::size_t j = 0; j < support_.size(); ++j) {
    if (support_[j] < 0 || static_cast<std::size_t>(support_[j]) >= arity_ ||
        (j > 0 && support_[j] <= support_[j - 1]))
      throw PreconditionError("support must be sorted indices below the arity");
    if (k_[j] < 0) throw PreconditionError("negative t-power in linear form");
    if (s_[j] != 0 && s_[j] != 1) throw PreconditionError("signs must be 0 or 1");
  }
}

std::vector<TPoly> LinearForm::coefficients() const {
  std::vector<TPoly> out(arity_);
  for (std::size_t j = 0; j < support_.size(); ++j)
    out[static_cast<std::size_t>(support_[j])] = TPoly::monomial(s_[j] ? -1 : 1, k_[j]);
  return out;
}

std::vector<BigRat> LinearForm::at(const BigRat& q) const {
  std::vector<BigRat> out(arity_);
  for (std::size_t j = 0; j < support_.size(); ++j) {
    BigRat c = pow(q, k_[j]);
    if (s_[j]) c = -c;
    out[static_cast<std::size_t>(support_[j])] = c;
  }
  return out;
}

std::string LinearForm::to_string() const {
  std::vector<std::string> coeffs(arity_, "0");
  auto polys = coefficients();
  for (std::size_t i = 0; i < arity_; ++i) coeffs[i] = polys[i].to_string();
  return format_linear_form(coeffs);
}

std::string format_linear_form(const std::vector<std::string>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string& c = coeffs[i];
    if (c == "0") continue;
    std::string var = "X" + std::to_string(i);
    std::string piece;
    if (c == "1")
      piece = var;
    else if (c == "-1")
      piece = "-" + var;
    else
      piece = c + "*" + var;
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out.empty() ? "0" : out;
}

std::string format_linear_form(const std::vector<BigRat>& coeffs) {
  std::vector<std::string> text;
  text.reserve(coeffs.size());
  for (const auto& c : coeffs) text.push_back(to_string(c));
  return format_linear_form(text);
}

// ---------------------------------------------------------------------------
// F_i, D_a, C, Cbar

TPoly FPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs[static_cast<std::size_t>(k)];
}

TPoly FPoly::eval(const TPoly& y) const {
  TPoly acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
  return acc;
}

FPoly f_poly(const ExponentVector& a, std::size_t i) {
  if (i >= a.size()) throw PreconditionError("variable index out of range");
  const int ai = a[i];
  const int m = ai == 0 ? -1 : (ai - 1) / 2;
  FPoly f{{TPoly(1)}};
  for (int j = 1; j <= m; ++j) {
    // multiply by (y - t^{a_i - 2j})
    const TPoly root = TPoly::monomial(1, ai - 2 * j);
    std::vector<TPoly> next(f.coeffs.size() + 1);
    for (std::size_t e = 0; e < f.coeffs.size(); ++e) {
      next[e + 1] += f.coeffs[e];
      next[e] -= f.coeffs[e] * root;
    }
    f.coeffs = std::move(next);
  }
  return f;
}

TPoly scale_D(const ExponentVector& a) {
  if (a.degree() < 1) throw PreconditionError("D_a needs |a| >= 1");
  const IndexData idx = index_data(a);
  BigInt c = pow(BigInt(2), static_cast<unsigned long>(a.n())) * multinomial(a);
  if (idx.zeros.size() % 2 == 1) c = -c;
  TPoly D(c);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    D *= f_poly(a, i).eval(TPoly::monomial(1, a[i]));
  }
  return D;
}

namespace {

// Caches F_i and F_i(1) for repeated coefficient evaluation.
class CoefficientBuilder {
 public:
  explicit CoefficientBuilder(const ExponentVector& a) : a_(a), idx_(index_data(a)) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      f_.push_back(f_poly(a, i));
      f_at_one_.push_back(f_.back().eval(TPoly(1)));
    }
  }

  const IndexData& idx() const { return idx_; }

  void check(const IndexSet& A, const std::vector<int>& k, const std::vector<int>& s) const {
    const std::size_t nvars = a_.size();
    if (!std::is_sorted(A.begin(), A.end()) || std::adjacent_find(A.begin(), A.end()) != A.end())
      throw PreconditionError("A must be sorted without repeats");
    if (A.size() >= nvars) throw PreconditionError("A must not be the full index set");
    if (!A.empty() && (A.front() < 0 || static_cast<std::size_t>(A.back()) >= nvars))
      throw PreconditionError("A contains an index out of range");
    if (!std::includes(A.begin(), A.end(), idx_.zeros.begin(), idx_.zeros.end()))
      throw PreconditionError("A must contain every zero exponent index");
    if (!std::includes(idx_.evens.begin(), idx_.evens.end(), A.begin(), A.end()))
      throw PreconditionError("A must consist of even exponent indices");
    const IndexSet rest = complement(A, nvars);
    if (k.size() != rest.size() || s.size() != rest.size())
      throw PreconditionError("k and s must be indexed by the complement of A");
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (k[j] < 0 || k[j] > idx_.m[static_cast<std::size_t>(rest[j])])
        throw PreconditionError("k_i out of range [0, m_i]");
      if (s[j] != 0 && s[j] != 1) throw PreconditionError("signs must be 0 or 1");
    }
  }

  TPoly C(const IndexSet& A, const std::vector<int>& k, const std::vector<int>& s) const {
    const IndexSet rest = complement(A, a_.size());
    long sign_exp = static_cast<long>(A.size());
    for (std::size_t j = 0; j < rest.size(); ++j)
      sign_exp += static_cast<long>(a_[static_cast<std::size_t>(rest[j])]) * s[j];
    BigInt c = pow(BigInt(2), A.size());
    if (sign_exp % 2 != 0) c = -c;
    TPoly out(c);
    for (int i : A) out *= f_at_one_[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < rest.size(); ++j)
      out *= f_[static_cast<std::size_t>(rest[j])].coeff(k[j]);
    return out;
  }

  TPoly Cbar(const IndexSet& A, const std::vector<int>& k, const std::vector<int>& s) const {
    const IndexSet rest = complement(A, a_.size());
    if (*std::min_element(k.begin(), k.end()) != 0)
      throw PreconditionError("reduced coefficient needs min k_i = 0");
    int top = -1;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      const int room = idx_.m[static_cast<std::size_t>(rest[j])] - k[j];
      top = top < 0 ? room : std::min(top, room);
    }
    TPoly out;
    std::vector<int> shifted = k;
    for (int j = 0; j <= top; ++j) {
      for (std::size_t u = 0; u < k.size(); ++u) shifted[u] = k[u] + j;
      out.add_scaled_shifted(C(A, shifted, s), 1, a_.degree() * j);
    }
    return out;
  }

 private:
  const ExponentVector& a_;
  IndexData idx_;
  std::vector<FPoly> f_;
  std::vector<TPoly> f_at_one_;
};

}  // namespace

TPoly coeff_C(const ExponentVector& a, const IndexSet& A, const std::vector<int>& k,
              const std::vector<int>& s) {
  CoefficientBuilder b(a);
  b.check(A, k, s);
  return b.C(A, k, s);
}

TPoly coeff_Cbar(const ExponentVector& a, const IndexSet& A, const std::vector<int>& k,
                 const std::vector<int>& s) {
  CoefficientBuilder b(a);
  b.check(A, k, s);
  return b.Cbar(A, k, s);
}

// ---------------------------------------------------------------------------
// Assembly

TRat SymbolicDecomposition::divided_coefficient(std::size_t i) const {
  return trat_reduce(terms.at(i).coeff, D);
}

SymbolicDecomposition decompose(const ExponentVector& a, Mode mode) {
  if (a.degree() < 1) throw PreconditionError("cannot decompose a degree-0 monomial");
  const bool reduced = mode == Mode::kReduced;
  CoefficientBuilder builder(a);
  SymbolicDecomposition dec{a, mode, scale_D(a), {}, 0};
  for (const IndexSet& A : enumerate_A(builder.idx())) {
    const IndexSet rest = complement(A, a.size());
    const auto signs = enumerate_S(A, a.size(), true);
    for (const auto& k : enumerate_K(A, builder.idx(), reduced)) {
      for (const auto& s : signs) {
        TPoly c = reduced ? builder.Cbar(A, k, s) : builder.C(A, k, s);
        if (c.is_zero()) {
          std::clog << "warning: zero coefficient dropped for a = (" << a.to_string() << ")\n";
          ++dec.dropped;
          continue;
        }
        dec.terms.push_back(DecompTerm{A, k, s, LinearForm(a.size(), rest, k, s), std::move(c)});
      }
    }
  }
  return dec;
}

BigInt summand_count_closed(const ExponentVector& a, Mode mode) {
  if (a.degree() < 1) throw PreconditionError("summand count needs |a| >= 1");
  BigInt plus = 1;
  BigInt minus = 1;
  bool all_even = true;
  for (int ai : a.values()) {
    if (ai == 0) continue;
    plus *= ai + 1;
    minus *= ai - 1;
    if (ai % 2 != 0) all_even = false;
  }
  BigInt twice;
  if (mode == Mode::kReduced)
    twice = plus - minus;
  else
    twice = all_even ? BigInt(plus - 1) : plus;
  return twice / 2;
}

RationalDecomposition specialize(const SymbolicDecomposition& dec, const BigRat& q) {
  const BigRat dq = dec.D.eval(q);
  if (sgn(dq) == 0)
    throw DegenerateParameterError("t = " + to_string(q) + " is a root of D_a = " +
                                   dec.D.to_string());
  RationalDecomposition out{dec.a, q, {}};
  for (const auto& term : dec.terms) {
    BigRat lambda = term.coeff.eval(q) / dq;
    if (sgn(lambda) == 0) continue;
    out.terms.push_back(RationalTerm{lambda, term.form.at(q), term.A, term.k, term.s});
  }
  return out;
}

BigRat default_parameter(const ExponentVector& a) {
  const TPoly D = scale_D(a);
  for (long q = 2;; ++q)
    if (sgn(D.eval(BigRat(q))) != 0) return BigRat(q);
}

}  // namespace waring
