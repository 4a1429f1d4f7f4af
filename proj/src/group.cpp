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

#include "dkl/group.hpp"

#include <algorithm>
#include <numeric>

namespace dkl {

FiniteGroup::FiniteGroup(int order, std::vector<std::vector<int>> table,
                         std::string name)
    : order_(order), table_(std::move(table)), name_(std::move(name)) {
  if (order_ <= 0) throw NotAGroup("order must be positive");
  if (static_cast<int>(table_.size()) != order_) {
    throw NotAGroup("table has wrong number of rows");
  }
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != order_) {
      throw NotAGroup("table row has wrong length");
    }
    for (int v : row) {
      if (v < 0 || v >= order_) throw NotAGroup("table entry out of range");
    }
  }
  // Latin square: every row and column is a permutation.
  for (int i = 0; i < order_; ++i) {
    std::vector<bool> seen_row(order_, false), seen_col(order_, false);
    for (int j = 0; j < order_; ++j) {
      if (seen_row[table_[i][j]]) throw NotAGroup("row is not a permutation");
      seen_row[table_[i][j]] = true;
      if (seen_col[table_[j][i]]) {
        throw NotAGroup("column is not a permutation");
      }
      seen_col[table_[j][i]] = true;
    }
  }
  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x) {
      ok = table_[e][x] == x && table_[x][e] == x;
    }
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw NotAGroup("no two-sided identity");
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw NotAGroup("element without inverse");
  }
  if (order_ <= 24) {
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        for (int c = 0; c < order_; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw NotAGroup("table is not associative");
          }
        }
      }
    }
  }
}

FiniteGroup make_cyclic(int m) {
  if (m <= 0) throw NotAGroup("cyclic group order must be positive");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
  }
  return FiniteGroup(m, std::move(t), "cyclic:" + std::to_string(m));
}

FiniteGroup make_symmetric(int k) {
  if (k < 1) throw NotAGroup("symmetric group degree must be positive");
  if (k > 5) throw TooLarge("make_symmetric supports k <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) -
                            perms.begin());
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(k);
      for (int x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(comp);
    }
  }
  return FiniteGroup(n, std::move(t), "sym:" + std::to_string(k));
}

int gmul(const FiniteGroup& g, int a, int b) { return g.mul(a, b); }

int ginv(const FiniteGroup& g, int a) { return g.inv(a); }

FiniteGroup group_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw UsageError("group spec must look like cyclic:m or sym:k");
  }
  std::string kind = spec.substr(0, colon);
  int arg = 0;
  try {
    arg = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad group spec argument: " + spec);
  }
  if (kind == "cyclic") return make_cyclic(arg);
  if (kind == "sym") return make_symmetric(arg);
  throw UsageError("unknown group kind: " + kind);
}

GroupAutomorphism::GroupAutomorphism(const FiniteGroup& g,
                                     std::vector<int> images)
    : images_(std::move(images)) {
  int n = g.order();
  if (static_cast<int>(images_.size()) != n) {
    throw NotAGroup("automorphism has wrong size");
  }
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v]) {
      throw NotAGroup("automorphism is not a permutation");
    }
    seen[v] = true;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (images_[g.mul(a, b)] != g.mul(images_[a], images_[b])) {
        throw NotAGroup("map does not preserve multiplication");
      }
    }
  }
}

GroupAutomorphism GroupAutomorphism::identity(const FiniteGroup& g) {
  std::vector<int> im(g.order());
  std::iota(im.begin(), im.end(), 0);
  return GroupAutomorphism(g, std::move(im));
}

GroupAutomorphism GroupAutomorphism::inner(const FiniteGroup& g, int c) {
  std::vector<int> im(g.order());
  for (int a = 0; a < g.order(); ++a) im[a] = g.mul(g.mul(c, a), g.inv(c));
  return GroupAutomorphism(g, std::move(im));
}

}  // namespace dkl
