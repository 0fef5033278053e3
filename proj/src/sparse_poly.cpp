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

#include "waring/sparse_poly.hpp"

namespace waring {

namespace {

struct CompositionWalker {
  int parts;
  const std::vector<std::vector<BigInt>>& pascal;
  const std::function<void(const std::vector<int>&, const BigInt&)>& fn;
  std::vector<int> b;

  void walk(int j, int remaining, const BigInt& multinom) {
    if (j == parts - 1) {
      b[static_cast<std::size_t>(j)] = remaining;
      fn(b, multinom);
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      b[static_cast<std::size_t>(j)] = x;
      BigInt m = multinom * pascal[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(x)];
      walk(j + 1, remaining - x, m);
    }
  }
};

}  // namespace

void for_each_composition(int d, int parts,
                          const std::function<void(const std::vector<int>&, const BigInt&)>& fn) {
  if (d < 0 || parts < 0) throw PreconditionError("negative composition size");
  if (parts == 0) {
    if (d == 0) fn({}, BigInt(1));
    return;
  }
  std::vector<std::vector<BigInt>> pascal(static_cast<std::size_t>(d) + 1);
  for (int r = 0; r <= d; ++r)
    for (int c = 0; c <= r; ++c) pascal[static_cast<std::size_t>(r)].push_back(binomial(r, c));
  CompositionWalker w{parts, pascal, fn, std::vector<int>(static_cast<std::size_t>(parts), 0)};
  w.walk(0, d, BigInt(1));
}

}  // namespace waring
