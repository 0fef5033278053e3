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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waring/numeric.hpp"

namespace waring {

/// Sorted list of variable indices.
using IndexSet = std::vector<int>;

/// Exponents (a_0, ..., a_n) of the monomial X_0^{a_0} ... X_n^{a_n}.
class ExponentVector {
 public:
  /// Throws PreconditionError on an empty list or a negative entry.
  explicit ExponentVector(std::vector<int> a);

  /// Parses "4,3,2". Throws ParseError.
  static ExponentVector parse(std::string_view text);

  const std::vector<int>& values() const { return a_; }
  int operator[](std::size_t i) const { return a_[i]; }
  /// Number of variables, n + 1.
  std::size_t size() const { return a_.size(); }
  /// The index n of the last variable.
  int n() const { return static_cast<int>(a_.size()) - 1; }
  /// d = sum of the exponents.
  int degree() const { return degree_; }

  std::string to_string() const;  // "4,3,2"

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> a_;
  int degree_ = 0;
};

/// Index sets attached to an exponent vector: zeros Z, even entries E and the
/// t-power bounds m_i = floor((a_i - 1) / 2).
struct IndexData {
  IndexSet zeros;
  IndexSet evens;
  std::vector<int> m;

  std::size_t size() const { return m.size(); }
};

IndexData index_data(const ExponentVector& a);

/// |a|! / prod a_i!.
BigInt multinomial(std::span<const int> a);
inline BigInt multinomial(const ExponentVector& a) { return multinomial(a.values()); }

/// Indices 0..nvars-1 not in A, ascending.
IndexSet complement(const IndexSet& A, std::size_t nvars);

/// Every A with Z <= A <= E except the full index set. Sets are sorted; the
/// list runs in binary-counting order over E \ Z (lowest index = lowest bit),
/// so for a = (4,3,2) it is [], [0], [2], [0,2].
std::vector<IndexSet> enumerate_A(const IndexData& idx);

/// Tuples (k_i) for i not in A with 0 <= k_i <= m_i, lexicographic. With
/// `reduced` only tuples with min k_i = 0 are kept.
std::vector<std::vector<int>> enumerate_K(const IndexSet& A, const IndexData& idx, bool reduced);

/// Sign tuples (s_i) in {0,1} for i not in A, lexicographic. With `reduced`
/// the sign of the least index is fixed to 0.
std::vector<std::vector<int>> enumerate_S(const IndexSet& A, std::size_t nvars, bool reduced);

/// sum over I in {0,1}^k of (-1)^{sum J_i I_i}, computed as prod (1 + (-1)^{J_i}).
BigInt sign_sum(std::span<const long> J);

/// Moebius function by trial division. Throws PreconditionError for d = 0.
int mobius(std::uint64_t d);

/// Number of primitive vectors p in Z_{>=0}^{n+1} with 1 <= |p| <= D, by the
/// Moebius closed form.
BigInt count_primitive(int n, int D);

/// Same count by walking every vector and filtering on gcd = 1.
BigInt enumerate_primitive(int n, int D);

}  // namespace waring
