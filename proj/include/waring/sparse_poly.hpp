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
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "waring/numeric.hpp"
#include "waring/tpoly.hpp"
#include "waring/trat.hpp"

namespace waring {

/// Exponent vector of a monomial X_0^{e_0} ... X_n^{e_n}.
using Exponents = std::vector<int>;

inline int exponent_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Scalar hooks used by SparsePoly. Every scalar must provide these.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<BigRat> {
  static bool is_zero(const BigRat& x) { return sgn(x) == 0; }
  static BigRat from_integer(const BigInt& z) { return BigRat(z); }
  static std::string to_string(const BigRat& x) { return waring::to_string(x); }
};

template <>
struct ScalarTraits<TPoly> {
  static bool is_zero(const TPoly& x) { return x.is_zero(); }
  static TPoly from_integer(const BigInt& z) { return TPoly(z); }
  static std::string to_string(const TPoly& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<TRat> {
  static bool is_zero(const TRat& x) { return x.is_zero(); }
  static TRat from_integer(const BigInt& z) { return TRat(TPoly(z)); }
  static std::string to_string(const TRat& x) { return x.to_string(); }
};

/// Calls fn(b, multinomial(d; b)) for every composition b of d into `parts`
/// nonnegative parts, in lexicographic order of b.
void for_each_composition(int d, int parts,
                          const std::function<void(const std::vector<int>&, const BigInt&)>& fn);

/// Sparse multivariate polynomial over a scalar S with a fixed number of
/// variables. No zero coefficient is ever stored.
template <class S>
class SparsePoly {
 public:
  using Scalar = S;
  using TermMap = std::map<Exponents, S>;

  explicit SparsePoly(std::size_t arity = 0) : arity_(arity) {}

  static SparsePoly monomial(Exponents e, const S& c) {
    SparsePoly p(e.size());
    p.add_term(e, c);
    return p;
  }
  static SparsePoly constant(std::size_t arity, const S& c) {
    return monomial(Exponents(arity, 0), c);
  }
  static SparsePoly variable(std::size_t arity, std::size_t i) {
    Exponents e(arity, 0);
    e.at(i) = 1;
    return monomial(std::move(e), ScalarTraits<S>::from_integer(1));
  }
  /// sum_i coeffs[i] X_i.
  static SparsePoly linear(const std::vector<S>& coeffs) {
    SparsePoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S() : it->second;
  }

  void add_term(const Exponents& e, const S& c) {
    if (e.size() != arity_) throw PreconditionError("exponent vector arity mismatch");
    for (int x : e)
      if (x < 0) throw PreconditionError("negative exponent");
    if (ScalarTraits<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Applies fn(coefficient&) to the coefficient of e in place (starting
  /// from a default-constructed zero) and drops the term if it vanishes.
  template <class F>
  void update(const Exponents& e, F&& fn) {
    auto [it, inserted] = terms_.try_emplace(e);
    fn(it->second);
    if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
  }

  /// Highest total degree of a stored term; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exponent_degree(e));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = exponent_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (exponent_degree(e) != d) return false;
    return true;
  }

  /// True when every term has degree exactly 1.
  bool is_linear_form() const {
    for (const auto& [e, c] : terms_)
      if (exponent_degree(e) != 1) return false;
    return true;
  }

  SparsePoly& operator+=(const SparsePoly& rhs) {
    check_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& rhs) {
    check_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, S(-c));
    return *this;
  }

  SparsePoly& operator*=(const S& c) {
    if (ScalarTraits<S>::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_arity(b);
    SparsePoly r(a.arity_);
    Exponents e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        S c = ca;
        c *= cb;
        r.add_term(e, c);
      }
    }
    return r;
  }

  SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Terms in ascending exponent order, e.g. "(3)*X0^2*X1 + (1/2)*X2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + ScalarTraits<S>::to_string(c) + ")";
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out += "*X" + std::to_string(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

 private:
  void check_arity(const SparsePoly& other) const {
    if (other.arity_ != arity_) throw PreconditionError("polynomial arity mismatch");
  }

  std::size_t arity_;
  TermMap terms_;
};

template <class S>
std::ostream& operator<<(std::ostream& os, const SparsePoly<S>& p) {
  return os << p.to_string();
}

/// (sum_i coeffs[i] X_i)^d by the multinomial theorem.
template <class S>
SparsePoly<S> linear_form_power(const std::vector<S>& coeffs, int d) {
  if (d < 0) throw PreconditionError("negative power");
  const std::size_t arity = coeffs.size();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < arity; ++i)
    if (!ScalarTraits<S>::is_zero(coeffs[i])) support.push_back(i);
  SparsePoly<S> out(arity);
  if (d == 0) return SparsePoly<S>::constant(arity, ScalarTraits<S>::from_integer(1));
  if (support.empty()) return out;

  // powers[j][e] = coeffs[support[j]]^e
  std::vector<std::vector<S>> powers(support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    powers[j].push_back(ScalarTraits<S>::from_integer(1));
    for (int e = 1; e <= d; ++e) {
      S next = powers[j].back();
      next *= coeffs[support[j]];
      powers[j].push_back(std::move(next));
    }
  }
  Exponents exps(arity, 0);
  for_each_composition(d, static_cast<int>(support.size()),
                       [&](const std::vector<int>& b, const BigInt& multinom) {
                         S c = ScalarTraits<S>::from_integer(multinom);
                         for (std::size_t j = 0; j < support.size(); ++j) {
                           exps[support[j]] = b[j];
                           if (b[j] != 0) c *= powers[j][static_cast<std::size_t>(b[j])];
                         }
                         out.add_term(exps, c);
                       });
  return out;
}

/// p^d. Linear forms use the multinomial theorem, anything else binary
/// exponentiation.
template <class S>
SparsePoly<S> spoly_pow(const SparsePoly<S>& p, int d) {
  if (d < 0) throw PreconditionError("negative power");
  if (!p.is_zero() && p.is_linear_form()) {
    std::vector<S> coeffs(p.arity());
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] == 1) coeffs[i] = c;
    return linear_form_power(coeffs, d);
  }
  SparsePoly<S> result = SparsePoly<S>::constant(p.arity(), ScalarTraits<S>::from_integer(1));
  SparsePoly<S> base = p;
  unsigned e = static_cast<unsigned>(d);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

/// Repeated multiplication; reference for spoly_pow in tests.
template <class S>
SparsePoly<S> spoly_pow_naive(const SparsePoly<S>& p, int d) {
  SparsePoly<S> result = SparsePoly<S>::constant(p.arity(), ScalarTraits<S>::from_integer(1));
  for (int i = 0; i < d; ++i) result *= p;
  return result;
}

}  // namespace waring
