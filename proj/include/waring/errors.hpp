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

#include <stdexcept>
#include <string>

namespace waring {

// Each error family maps to one CLI exit code (see tools/waring.cpp).

/// Malformed text input (numbers, exponent lists, JSON documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition on an index set, tuple or degree.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by a zero polynomial or rational.
class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The chosen value of the parameter t is a root of D_a (or of a denominator).
class DegenerateParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A linear form is not regular on a simplex and no parameter repairs it.
class RegularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Simplex with affinely dependent vertices or mismatched dimensions.
class DegenerateSimplexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace waring
