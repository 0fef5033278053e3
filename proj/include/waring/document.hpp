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

// Serialized forms of decompositions and the integration input files.
//
// Every arbitrary-precision value is written as a decimal string ("p" or
// "p/q"); only small indices (exponents, A, k, s) are JSON integers.

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "waring/monomial_decomp.hpp"
#include "waring/simplex.hpp"
#include "waring/sparse_poly.hpp"

namespace waring {

inline constexpr int kSchemaVersion = 1;

struct DocumentTerm {
  IndexSet A;
  std::vector<int> k;
  std::vector<int> s;
  /// Integer coefficients in ascending powers of t (symbolic documents), or a
  /// single rational "p/q" (specialized documents).
  std::variant<std::vector<std::string>, std::string> coefficient;
  std::vector<std::string> linear_form;  // per-variable coefficient text

  friend bool operator==(const DocumentTerm&, const DocumentTerm&) = default;
};

struct DecompositionDocument {
  int schema_version = kSchemaVersion;
  std::vector<int> exponents;
  std::string mode;       // "reduced" or "full"
  std::string parameter;  // "t" or an exact rational
  std::vector<std::string> D;  // ascending powers of t
  std::vector<DocumentTerm> terms;

  friend bool operator==(const DecompositionDocument&, const DecompositionDocument&) = default;
};

DecompositionDocument make_document(const SymbolicDecomposition& dec);
/// The rational variant keeps D_a symbolic and stores lambda = coeff(q)/D(q).
DecompositionDocument make_document(const RationalDecomposition& rdec, Mode mode, const TPoly& D);

/// Pretty-printed JSON, stable key order.
std::string emit_document(const DecompositionDocument& doc);
/// Throws ParseError on malformed JSON or schema violations.
DecompositionDocument parse_document(std::string_view text);

/// Rebuilds the decomposition a document records, so that a stored document
/// can be verified again. Linear forms are rebuilt from (A, k, s) and must
/// match the recorded strings. Throws ParseError on any inconsistency.
SymbolicDecomposition symbolic_from_document(const DecompositionDocument& doc);
RationalDecomposition rational_from_document(const DecompositionDocument& doc);

/// Human-readable identity, one summand per line.
std::string render_text(const SymbolicDecomposition& dec);
std::string render_text(const RationalDecomposition& rdec);

/// "X0^4*X1^3*X2^2".
std::string monomial_text(const std::vector<int>& exponents);

/// Polynomial file: [{"coeff": "p/q", "exponents": [..]}, ...]. All exponent
/// lists must share one length. Throws ParseError.
SparsePoly<BigRat> parse_polynomial(std::string_view json_text);

/// Simplex file: [["p/q", ...], ...], one vertex per entry. Throws ParseError
/// on malformed text; geometric problems surface as DegenerateSimplexError.
Simplex parse_simplex(std::string_view json_text);

}  // namespace waring
