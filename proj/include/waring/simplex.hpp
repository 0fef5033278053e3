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

// Exact integration of polynomials over full-dimensional rational simplices.
//
// A polynomial is split into homogeneous parts, each part is written as a sum
// of powers of linear forms, and every power is integrated with Brion's vertex
// formula
//
//   int_S l^D = n! vol(S) D!/(D+n)! sum_i <l,s_i>^{D+n} / prod_{j!=i} <l,s_i-s_j>
//
// which needs l to take pairwise distinct values on the vertices.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "waring/form_decomp.hpp"
#include "waring/sparse_poly.hpp"

namespace waring {

using Point = std::vector<BigRat>;
using RatMatrix = std::vector<std::vector<BigRat>>;  // row-major

/// Convex hull of n + 1 affinely independent points of Q^n, n >= 1.
class Simplex {
 public:
  /// Throws DegenerateSimplexError on a wrong vertex count, mismatched
  /// coordinates or affinely dependent vertices.
  explicit Simplex(std::vector<Point> vertices);

  static Simplex standard(std::size_t n);

  std::size_t dimension() const { return vertices_.size() - 1; }
  const std::vector<Point>& vertices() const { return vertices_; }
  /// det(v_1 - v_0, ..., v_n - v_0), nonzero.
  const BigRat& determinant() const { return det_; }

 private:
  std::vector<Point> vertices_;
  BigRat det_;
};

/// Exact determinant by fraction Gaussian elimination.
BigRat determinant(RatMatrix m);

BigRat volume(const Simplex& simplex);

/// True iff the form takes pairwise distinct values on the vertices.
bool is_regular(std::span<const BigRat> form, const Simplex& simplex);

/// Integral of (form . x)^D over the simplex by the vertex formula. Throws
/// RegularityError when the form is not regular.
BigRat integrate_power(std::span<const BigRat> form, int D, const Simplex& simplex);

/// p(M y + shift) as a polynomial in y. M is arity(p) x k.
SparsePoly<BigRat> substitute_affine(const SparsePoly<BigRat>& p, const RatMatrix& M,
                                     const std::vector<BigRat>& shift);

struct IntegrateOptions {
  int max_parameter_attempts = 50;
  /// When some form is non-regular for every t, retry in coordinates
  /// x = M y for a fixed sequence of integer matrices with det M = 1.
  bool allow_coordinate_change = true;
  int max_coordinate_changes = 16;
};

struct IntegrationResult {
  BigRat value;
  std::optional<BigRat> q;  // unset when p has no part of degree >= 1
  std::vector<FormDecomposition> decompositions;  // one per homogeneous degree >= 1
  RatMatrix transform;  // x = M y; empty means identity
  std::size_t forms_integrated = 0;
};

/// Integral of p over the simplex through Waring decompositions and the
/// vertex formula. Throws RegularityError when no parameter (and, if
/// allowed, no coordinate change) makes every form regular.
IntegrationResult integrate_poly(const SparsePoly<BigRat>& p, const Simplex& simplex,
                                 const IntegrateOptions& options = {});

/// Independent reference: pulls p back to the standard simplex and applies
/// int u^a du = prod a_i! / (|a| + n)! term by term.
BigRat oracle_integrate(const SparsePoly<BigRat>& p, const Simplex& simplex);

}  // namespace waring
