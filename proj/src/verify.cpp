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

#include "waring/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace waring {

namespace {

// Splits [0, n) into contiguous chunks, runs fn(begin, end) -> Partial on each
// (concurrently when asked) and folds the partials with +=.
template <class Partial, class Fn>
Partial map_reduce(std::size_t n, bool parallel, Partial init, Fn fn) {
  const std::size_t workers =
      parallel ? std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()))
               : 1;
  if (workers <= 1) {
    init += fn(0, n);
    return init;
  }
  std::vector<std::future<Partial>> parts;
  const std::size_t step = (n + workers - 1) / workers;
  for (std::size_t b = 0; b < n; b += step)
    parts.push_back(std::async(std::launch::async, fn, b, std::min(n, b + step)));
  for (auto& f : parts) init += f.get();
  return init;
}

using IntegerTerms = std::map<Exponents, BigInt>;

struct IntegerAccumulator {
  IntegerTerms terms;
  IntegerAccumulator& operator+=(const IntegerAccumulator& other) {
    for (const auto& [e, c] : other.terms) terms[e] += c;
    return *this;
  }
};

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

SparsePoly<TPoly> expand_symbolic(const SymbolicDecomposition& dec, bool parallel) {
  const std::size_t arity = dec.a.size();
  const int d = dec.a.degree();
  auto expand_range = [&](std::size_t begin, std::size_t end) {
    SparsePoly<TPoly> acc(arity);
    Exponents e(arity, 0);
    for (std::size_t i = begin; i < end; ++i) {
      const DecompTerm& term = dec.terms[i];
      const IndexSet& support = term.form.support();
      const auto& k = term.form.k();
      const auto& s = term.form.s();
      std::fill(e.begin(), e.end(), 0);
      // coefficient of X^b in (sum (-1)^{s_j} t^{k_j} X_j)^d is
      // multinomial(b) (-1)^{sum s_j b_j} t^{sum k_j b_j}
      for_each_composition(d, static_cast<int>(support.size()),
                           [&](const std::vector<int>& b, const BigInt& multinom) {
                             int shift = 0;
                             int sign = 0;
                             for (std::size_t j = 0; j < support.size(); ++j) {
                               e[static_cast<std::size_t>(support[j])] = b[j];
                               shift += k[j] * b[j];
                               sign += s[j] * b[j];
                             }
                             const BigInt factor = sign % 2 ? BigInt(-multinom) : multinom;
                             acc.update(e, [&](TPoly& c) {
                               c.add_scaled_shifted(term.coeff, factor, shift);
                             });
                           });
    }
    return acc;
  };
  return map_reduce(dec.terms.size(), parallel, SparsePoly<TPoly>(arity), expand_range);
}

SparsePoly<BigRat> expand_rational(std::span<const RationalTerm> terms, int d, std::size_t arity,
                                   bool parallel) {
  // Clear denominators: lambda L^d = mu (L')^d with L' integral and
  // mu = lambda / den(L)^d, then scale every mu by a common multiple M.
  std::vector<std::vector<BigInt>> integral(terms.size());
  std::vector<BigRat> mu(terms.size());
  BigInt common = 1;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].form.size() != arity) throw PreconditionError("linear form arity mismatch");
    BigInt den = 1;
    for (const auto& c : terms[i].form) den = lcm(den, c.get_den());
    for (const auto& c : terms[i].form) integral[i].push_back(BigInt(c * den));
    mu[i] = terms[i].lambda / BigRat(pow(den, static_cast<unsigned long>(d)));
    common = lcm(common, mu[i].get_den());
  }

  auto expand_range = [&](std::size_t begin, std::size_t end) {
    IntegerAccumulator acc;
    Exponents e(arity, 0);
    for (std::size_t i = begin; i < end; ++i) {
      const BigInt weight = BigInt(mu[i] * common);
      std::vector<std::size_t> support;
      for (std::size_t v = 0; v < arity; ++v)
        if (sgn(integral[i][v]) != 0) support.push_back(v);
      if (support.empty()) {
        if (d == 0) acc.terms[Exponents(arity, 0)] += weight;
        continue;
      }
      std::vector<std::vector<BigInt>> powers(support.size());
      for (std::size_t j = 0; j < support.size(); ++j)
        for (int x = 0; x <= d; ++x)
          powers[j].push_back(pow(integral[i][support[j]], static_cast<unsigned long>(x)));
      std::fill(e.begin(), e.end(), 0);
      for_each_composition(d, static_cast<int>(support.size()),
                           [&](const std::vector<int>& b, const BigInt& multinom) {
                             BigInt c = weight * multinom;
                             for (std::size_t j = 0; j < support.size(); ++j) {
                               e[support[j]] = b[j];
                               c *= powers[j][static_cast<std::size_t>(b[j])];
                             }
                             acc.terms[e] += c;
                           });
    }
    return acc;
  };
  IntegerAccumulator total = map_reduce(terms.size(), parallel, IntegerAccumulator{}, expand_range);

  SparsePoly<BigRat> out(arity);
  for (const auto& [exps, c] : total.terms) {
    if (sgn(c) == 0) continue;
    out.add_term(exps, ratio(c, common));
  }
  return out;
}

VerifyReport<TPoly> verify_symbolic(const SymbolicDecomposition& dec, bool parallel) {
  auto lhs = SparsePoly<TPoly>::monomial(dec.a.values(), dec.D);
  return compare(std::move(lhs), expand_symbolic(dec, parallel));
}

VerifyReport<BigRat> verify_specialized(const RationalDecomposition& rdec, bool parallel) {
  auto lhs = SparsePoly<BigRat>::monomial(rdec.a.values(), BigRat(1));
  return compare(std::move(lhs),
                 expand_rational(rdec.terms, rdec.a.degree(), rdec.a.size(), parallel));
}

RationalDecomposition naive_decompose(const ExponentVector& a) {
  const int D = a.degree();
  if (D < 1) throw PreconditionError("naive decomposition needs |a| >= 1");
  const BigRat scale(BigInt(1), factorial(static_cast<unsigned long>(D)));
  RationalDecomposition out{a, std::nullopt, {}};
  std::vector<int> p(a.size(), 0);
  while (true) {
    // odometer over 0 <= p_i <= a_i, last index fastest
    std::size_t j = p.size();
    bool done = true;
    while (j > 0) {
      --j;
      if (p[j] < a[j]) {
        ++p[j];
        done = false;
        break;
      }
      p[j] = 0;
    }
    if (done) break;
    int total = 0;
    BigInt c = 1;
    std::vector<BigRat> form;
    for (std::size_t i = 0; i < p.size(); ++i) {
      total += p[i];
      c *= binomial(a[i], p[i]);
      form.emplace_back(p[i]);
    }
    if ((D - total) % 2 != 0) c = -c;
    out.terms.push_back(RationalTerm{BigRat(BigRat(c) * scale), std::move(form), {}, {}, {}});
  }
  return out;
}

}  // namespace waring
