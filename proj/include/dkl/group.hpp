// Copyright 2026 The Authors.
//
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

#ifndef DKL_GROUP_HPP_
#define DKL_GROUP_HPP_

#include <string>
#include <vector>

#include "dkl/errors.hpp"

namespace dkl {

// Finite group as an explicit multiplication table over element indices
// 0..order-1.  The table is validated at construction: Latin square,
// two-sided identity, inverses, and associativity for order <= 24.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<std::vector<int>> table,
              std::string name = "");

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  int order_;
  std::vector<std::vector<int>> table_;
  int identity_;
  std::vector<int> inverse_;
  std::string name_;
};

// Cyclic group Z/m with addition mod m; identity is index 0.
FiniteGroup make_cyclic(int m);

// Symmetric group S_k on permutations of {0..k-1} in lexicographic index
// order; k <= 5, otherwise TooLarge.  Composition (a*b)(x) = a(b(x)).
FiniteGroup make_symmetric(int k);

int gmul(const FiniteGroup& g, int a, int b);
int ginv(const FiniteGroup& g, int a);

// Parses "cyclic:m" or "sym:k".
FiniteGroup group_from_spec(const std::string& spec);

// Automorphism of G as an index permutation; validated to preserve the
// multiplication table.
class GroupAutomorphism {
 public:
  GroupAutomorphism(const FiniteGroup& g, std::vector<int> images);
  static GroupAutomorphism identity(const FiniteGroup& g);
  // Conjugation h -> c h c^{-1}.
  static GroupAutomorphism inner(const FiniteGroup& g, int c);
  int apply(int a) const { return images_[a]; }
  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

}  // namespace dkl

#endif  // DKL_GROUP_HPP_
