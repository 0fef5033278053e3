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

#include "waring/simplex.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <utility>

namespace waring {

// ---------------------------------------------------------------------------
// Geometry

BigRat determinant(RatMatrix m) {
  const std::size_t n = m.size();
  BigRat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const BigRat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw DegenerateSimplexError("a simplex needs at least 2 vertices");
  const std::size_t n = vertices_.size() - 1;
  for (const auto& v : vertices_)
    if (v.size() != n)
      throw DegenerateSimplexError("expected " + std::to_string(n + 1) + " vertices in " +
                                   std::to_string(n) + "-space");
  RatMatrix edges(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) edges[j][i] = vertices_[i + 1][j] - vertices_[0][j];
  det_ = waring::determinant(std::move(edges));
  if (sgn(det_) == 0) throw DegenerateSimplexError("simplex vertices are affinely dependent");
}

Simplex Simplex::standard(std::size_t n) {
  std::vector<Point> v(n + 1, Point(n, BigRat(0)));
  for (std::size_t i = 0; i < n; ++i) v[i + 1][i] = 1;
  return Simplex(std::move(v));
}

BigRat volume(const Simplex& simplex) {
  return BigRat(abs(simplex.determinant()) / BigRat(factorial(simplex.dimension())));
}

namespace {

BigRat dot(std::span<const BigRat> a, std::span<const BigRat> b) {
  BigRat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<BigRat> vertex_values(std::span<const BigRat> form, const Simplex& simplex) {
  if (form.size() != simplex.dimension())
    throw PreconditionError("linear form and simplex dimensions differ");
  std::vector<BigRat> values;
  for (const auto& v : simplex.vertices()) values.push_back(dot(form, v));
  return values;
}

bool pairwise_distinct(std::vector<BigRat> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

}  // namespace

bool is_regular(std::span<const BigRat> form, const Simplex& simplex) {
  return pairwise_distinct(vertex_values(form, simplex));
}

BigRat integrate_power(std::span<const BigRat> form, int D, const Simplex& simplex) {
  if (D < 0) throw PreconditionError("negative power");
  const std::vector<BigRat> values = vertex_values(form, simplex);
  if (!pairwise_distinct(values))
    throw RegularityError("linear form " + format_linear_form(std::vector<BigRat>(form.begin(), form.end())) +
                          " takes equal values on two vertices");
  const std::size_t n = simplex.dimension();
  BigRat sum = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    BigRat denom = 1;
    for (std::size_t j = 0; j < values.size(); ++j)
      if (j != i) denom *= values[i] - values[j];
    sum += pow(values[i], static_cast<long>(D) + static_cast<long>(n)) / denom;
  }
  const BigRat scale = ratio(factorial(static_cast<unsigned long>(D)),
                             factorial(static_cast<unsigned long>(D) + n));
  // n! vol = |det|
  return BigRat(abs(simplex.determinant()) * scale * sum);
}

SparsePoly<BigRat> substitute_affine(const SparsePoly<BigRat>& p, const RatMatrix& M,
                                     const std::vector<BigRat>& shift) {
  if (M.size() != p.arity() || shift.size() != p.arity())
    throw PreconditionError("substitution size mismatch");
  const std::size_t k = M.empty() ? 0 : M.front().size();
  std::vector<SparsePoly<BigRat>> images;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    if (M[i].size() != k) throw PreconditionError("ragged substitution matrix");
    SparsePoly<BigRat> xi = SparsePoly<BigRat>::linear(M[i]);
    xi += SparsePoly<BigRat>::constant(k, shift[i]);
    images.push_back(std::move(xi));
  }
  std::map<std::pair<std::size_t, int>, SparsePoly<BigRat>> powers;
  auto power_of = [&](std::size_t i, int e) -> const SparsePoly<BigRat>& {
    auto it = powers.find({i, e});
    if (it == powers.end()) it = powers.emplace(std::make_pair(i, e), spoly_pow(images[i], e)).first;
    return it->second;
  };
  SparsePoly<BigRat> out(k);
  for (const auto& [e, c] : p.terms()) {
    SparsePoly<BigRat> term = SparsePoly<BigRat>::constant(k, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power_of(i, e[i]);
    out += term;
  }
  return out;
}

BigRat oracle_integrate(const SparsePoly<BigRat>& p, const Simplex& simplex) {
  const std::size_t n = simplex.dimension();
  if (p.arity() != n) throw PreconditionError("polynomial and simplex dimensions differ");
  const auto& v = simplex.vertices();
  RatMatrix T(n, std::vector<BigRat>(n));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t col = 0; col < n; ++col) T[row][col] = v[col + 1][row] - v[0][row];
  const SparsePoly<BigRat> pulled = substitute_affine(p, T, v[0]);
  BigRat total = 0;
  for (const auto& [e, c] : pulled.terms()) {
    BigInt num = 1;
    for (int x : e) num *= factorial(static_cast<unsigned long>(x));
    total += c * ratio(num, factorial(static_cast<unsigned long>(exponent_degree(e)) + n));
  }
  return BigRat(total * abs(simplex.determinant()));
}

// ---------------------------------------------------------------------------
// integrate_poly

namespace {

using FormKey = std::tuple<IndexSet, std::vector<int>, std::vector<int>>;

std::vector<long> first_primes(int count) {
  std::vector<long> out;
  for (long c = 2; static_cast<int>(out.size()) < count; ++c) {
    bool prime = true;
    for (long p : out) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(c);
  }
  return out;
}

// Unit lower times unit upper triangular integer matrix (det 1), entries
// drawn from a fixed mt19937 stream so the sequence is reproducible.
RatMatrix coordinate_change(std::size_t n, unsigned attempt) {
  std::mt19937 gen(attempt);
  auto draw = [&] { return BigRat(static_cast<long>(gen() % 7) - 3); };
  RatMatrix L(n, std::vector<BigRat>(n)), U(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    L[i][i] = U[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) L[i][j] = draw();
    for (std::size_t j = i + 1; j < n; ++j) U[i][j] = draw();
  }
  RatMatrix M(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) M[i][j] += L[i][k] * U[k][j];
  return M;
}

// Solves M y = x for every vertex by Gaussian elimination.
std::vector<Point> pull_back_vertices(const RatMatrix& M, const std::vector<Point>& vertices) {
  const std::size_t n = M.size();
  std::vector<Point> out;
  for (const auto& x : vertices) {
    RatMatrix aug = M;
    for (std::size_t i = 0; i < n; ++i) aug[i].push_back(x[i]);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (sgn(aug[pivot][col]) == 0) ++pivot;
      std::swap(aug[pivot], aug[col]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || sgn(aug[r][col]) == 0) continue;
        const BigRat f = aug[r][col] / aug[col][col];
        for (std::size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
      }
    }
    Point y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = aug[i][n] / aug[i][i];
    out.push_back(std::move(y));
  }
  return out;
}

// <l_t, v> as a polynomial in t vanishes identically?
bool identically_tied(const FormKey& form, const Point& delta) {
  const auto& [support, k, s] = form;
  std::map<int, BigRat> by_power;
  for (std::size_t j = 0; j < support.size(); ++j) {
    const BigRat& x = delta[static_cast<std::size_t>(support[j])];
    if (s[j])
      by_power[k[j]] -= x;
    else
      by_power[k[j]] += x;
  }
  return std::all_of(by_power.begin(), by_power.end(),
                     [](const auto& kv) { return sgn(kv.second) == 0; });
}

struct Attempt {
  std::optional<IntegrationResult> result;
  std::string failure;
  bool structural = false;  // some form is tied for every t
};

Attempt try_integrate(const std::map<int, SparsePoly<BigRat>>& parts, const Simplex& simplex,
                      const IntegrateOptions& options) {
  Attempt attempt;
  std::set<FormKey> forms;
  std::vector<TPoly> scales;
  for (const auto& [deg, part] : parts) {
    for (const auto& [e, c] : part.terms()) {
      const SymbolicDecomposition dec = decompose(ExponentVector(e));
      scales.push_back(dec.D);
      for (const auto& term : dec.terms)
        forms.emplace(term.form.support(), term.form.k(), term.form.s());
    }
  }

  const auto& v = simplex.vertices();
  for (const auto& form : forms) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        Point delta(v[i].size());
        for (std::size_t c = 0; c < delta.size(); ++c) delta[c] = v[i][c] - v[j][c];
        if (identically_tied(form, delta)) {
          const auto& [support, k, s] = form;
          attempt.structural = true;
          attempt.failure = "form " + LinearForm(simplex.dimension(), support, k, s).to_string() +
                            " ties vertices " + std::to_string(i) + " and " + std::to_string(j) +
                            " for every t";
          return attempt;
        }
      }
    }
  }

  for (long q : first_primes(options.max_parameter_attempts)) {
    const BigRat t(q);
    const bool degenerate = std::any_of(scales.begin(), scales.end(),
                                        [&](const TPoly& D) { return sgn(D.eval(t)) == 0; });
    if (degenerate) continue;
    const bool regular = std::all_of(forms.begin(), forms.end(), [&](const FormKey& form) {
      const auto& [support, k, s] = form;
      return is_regular(LinearForm(simplex.dimension(), support, k, s).at(t), simplex);
    });
    if (!regular) continue;

    IntegrationResult result;
    result.q = t;
    for (const auto& [deg, part] : parts) {
      FormDecomposition dec = decompose_form(part, t);
      for (const auto& [form, lambda] : dec.terms) {
        result.value += lambda * integrate_power(form, deg, simplex);
        ++result.forms_integrated;
      }
      result.decompositions.push_back(std::move(dec));
    }
    attempt.result = std::move(result);
    return attempt;
  }
  attempt.failure = "no t among the first " + std::to_string(options.max_parameter_attempts) +
                    " primes makes every form regular with D_a(t) != 0";
  return attempt;
}

}  // namespace

IntegrationResult integrate_poly(const SparsePoly<BigRat>& p, const Simplex& simplex,
                                 const IntegrateOptions& options) {
  const std::size_t n = simplex.dimension();
  if (p.arity() != n) throw PreconditionError("polynomial and simplex dimensions differ");

  BigRat constant = p.coeff(Exponents(n, 0));
  SparsePoly<BigRat> rest = p;
  rest.add_term(Exponents(n, 0), BigRat(-constant));
  const BigRat base = constant * volume(simplex);
  if (rest.is_zero()) return IntegrationResult{base, std::nullopt, {}, {}, 0};

  std::string diagnostics;
  const int changes = options.allow_coordinate_change ? options.max_coordinate_changes : 0;
  for (int attempt = 0; attempt <= changes; ++attempt) {
    RatMatrix M;
    SparsePoly<BigRat> poly = rest;
    std::optional<Simplex> moved;
    if (attempt > 0) {
      M = coordinate_change(n, static_cast<unsigned>(attempt));
      poly = substitute_affine(rest, M, std::vector<BigRat>(n, BigRat(0)));
      moved.emplace(pull_back_vertices(M, simplex.vertices()));
    }
    const Simplex& target = moved ? *moved : simplex;

    std::map<int, SparsePoly<BigRat>> parts;
    for (const auto& [e, c] : poly.terms()) {
      auto it = parts.try_emplace(exponent_degree(e), n).first;
      it->second.add_term(e, c);
    }
    Attempt outcome = try_integrate(parts, target, options);
    if (outcome.result) {
      outcome.result->value += base;
      outcome.result->transform = std::move(M);
      return std::move(*outcome.result);
    }
    diagnostics += (diagnostics.empty() ? "" : "; ") + std::string("attempt ") +
                   std::to_string(attempt) + ": " + outcome.failure;
    if (!outcome.structural) break;  // parameter budget exhausted
  }
  throw RegularityError("cannot make every linear form regular: " + diagnostics);
}

}  // namespace waring
