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

#include "waring/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace waring {

ExponentVector::ExponentVector(std::vector<int> a) : a_(std::move(a)) {
  if (a_.empty()) throw PreconditionError("exponent vector must have at least one entry");
  for (int x : a_) {
    if (x < 0) throw PreconditionError("exponents must be nonnegative");
    degree_ += x;
  }
}

ExponentVector ExponentVector::parse(std::string_view text) {
  std::vector<int> a;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    BigInt v = parse_integer(text.substr(pos, comma - pos));
    if (sgn(v) < 0 || v > 1000000) throw ParseError("exponent out of range: " + v.get_str());
    a.push_back(static_cast<int>(v.get_si()));
    pos = comma + 1;
  }
  return ExponentVector(std::move(a));
}

std::string ExponentVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a_[i]);
  }
  return s;
}

IndexData index_data(const ExponentVector& a) {
  IndexData idx;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ai = a[i];
    if (ai == 0) idx.zeros.push_back(static_cast<int>(i));
    if (ai % 2 == 0) idx.evens.push_back(static_cast<int>(i));
    // floor((a_i - 1) / 2), with floor(-1/2) = -1
    idx.m.push_back(ai == 0 ? -1 : (ai - 1) / 2);
  }
  return idx;
}

BigInt multinomial(std::span<const int> a) {
  long total = 0;
  BigInt r = 1;
  for (int x : a) {
    total += x;
    r *= binomial(total, x);
  }
  return r;
}

IndexSet complement(const IndexSet& A, std::size_t nvars) {
  IndexSet out;
  for (int i = 0; i < static_cast<int>(nvars); ++i)
    if (!std::binary_search(A.begin(), A.end(), i)) out.push_back(i);
  return out;
}

std::vector<IndexSet> enumerate_A(const IndexData& idx) {
  IndexSet free;
  std::set_difference(idx.evens.begin(), idx.evens.end(), idx.zeros.begin(), idx.zeros.end(),
                      std::back_inserter(free));
  std::vector<IndexSet> out;
  const std::uint64_t count = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    IndexSet A = idx.zeros;
    for (std::size_t j = 0; j < free.size(); ++j)
      if (mask & (std::uint64_t{1} << j)) A.push_back(free[j]);
    std::sort(A.begin(), A.end());
    if (A.size() == idx.size()) continue;  // no linear form left
    out.push_back(std::move(A));
  }
  return out;
}

namespace {

void check_A(const IndexSet& A, const IndexData& idx) {
  if (!std::is_sorted(A.begin(), A.end()) ||
      std::adjacent_find(A.begin(), A.end()) != A.end())
    throw PreconditionError("index set must be sorted without repeats");
  if (A.size() >= idx.size()) throw PreconditionError("A must not be the full index set");
  if (!std::includes(A.begin(), A.end(), idx.zeros.begin(), idx.zeros.end()))
    throw PreconditionError("A must contain every zero exponent index");
  if (!std::includes(idx.evens.begin(), idx.evens.end(), A.begin(), A.end()))
    throw PreconditionError("A must consist of even exponent indices");
}

}  // namespace

std::vector<std::vector<int>> enumerate_K(const IndexSet& A, const IndexData& idx, bool reduced) {
  check_A(A, idx);
  const IndexSet rest = complement(A, idx.size());
  std::vector<int> bound;
  for (int i : rest) bound.push_back(idx.m[static_cast<std::size_t>(i)]);

  std::vector<std::vector<int>> out;
  std::vector<int> k(rest.size(), 0);
  while (true) {
    if (!reduced || *std::min_element(k.begin(), k.end()) == 0) out.push_back(k);
    // odometer, last position fastest
    std::size_t j = k.size();
    while (j > 0) {
      --j;
      if (k[j] < bound[j]) {
        ++k[j];
        break;
      }
      k[j] = 0;
      if (j == 0) return out;
    }
    if (k.empty()) return out;
  }
}

std::vector<std::vector<int>> enumerate_S(const IndexSet& A, std::size_t nvars, bool reduced) {
  if (A.size() >= nvars) throw PreconditionError("A must not be the full index set");
  const std::size_t r = nvars - A.size();
  std::vector<std::vector<int>> out;
  const std::uint64_t count = std::uint64_t{1} << r;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<int> s(r);
    for (std::size_t j = 0; j < r; ++j) s[j] = static_cast<int>((code >> (r - 1 - j)) & 1U);
    if (reduced && s[0] != 0) continue;
    out.push_back(std::move(s));
  }
  return out;
}

BigInt sign_sum(std::span<const long> J) {
  BigInt r = 1;
  for (long j : J) {
    if (j % 2 != 0) return 0;
    r *= 2;
  }
  return r;
}

int mobius(std::uint64_t d) {
  if (d == 0) throw PreconditionError("mobius is defined for d >= 1");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    result = -result;
  }
  if (d > 1) result = -result;
  return result;
}

BigInt count_primitive(int n, int D) {
  if (n < 0 || D < 1) throw PreconditionError("count_primitive needs n >= 0 and D >= 1");
  BigInt total = 0;
  for (int d = 1; d <= D; ++d) {
    const int mu = mobius(static_cast<std::uint64_t>(d));
    if (mu == 0) continue;
    BigInt c = binomial(n + 1 + D / d, n + 1) - 1;
    if (mu > 0)
      total += c;
    else
      total -= c;
  }
  return total;
}

namespace {

// Vectors with `slots` entries summing to at most `budget`; counts those whose
// running gcd (with `g`) ends at 1.
std::uint64_t count_coprime(int slots, int budget, long g) {
  if (slots == 0) return g == 1 ? 1 : 0;
  std::uint64_t total = 0;
  for (int x = 0; x <= budget; ++x) total += count_coprime(slots - 1, budget - x, std::gcd(g, long{x}));
  return total;
}

}  // namespace

BigInt enumerate_primitive(int n, int D) {
  if (n < 0 || D < 1) throw PreconditionError("enumerate_primitive needs n >= 0 and D >= 1");
  // gcd(0, ..., 0) = 0, so the zero vector is never counted
  std::uint64_t c = count_coprime(n + 1, D, 0);
  BigInt r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(c));
  return r;
}

}  // namespace waring
