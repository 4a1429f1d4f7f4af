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

#include "dkl/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace dkl {

namespace {

int popcount(uint32_t m) { return std::popcount(m); }

std::vector<int> elements_of(uint32_t mask) {
  std::vector<int> out;
  for (int e = 1; e <= 32; ++e) {
    if (mask & (1u << (e - 1))) out.push_back(e);
  }
  return out;
}

uint32_t bit(int e) { return 1u << (e - 1); }

bool exchange_ok(const std::vector<uint32_t>& bases) {
  for (uint32_t a : bases) {
    for (uint32_t b : bases) {
      uint32_t only_a = a & ~b;
      if (only_a == 0) continue;
      for (uint32_t x = only_a; x;) {
        uint32_t abit = x & (x ^ (x - 1));
        x &= x - 1;
        bool found = false;
        for (uint32_t y = b & ~a; y;) {
          uint32_t bbit = y & (y ^ (y - 1));
          y &= y - 1;
          uint32_t cand = (a & ~abit) | bbit;
          if (std::binary_search(bases.begin(), bases.end(), cand)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

LabeledMatroid LabeledMatroid::from_basis_masks(uint32_t ground,
                                                std::vector<uint32_t> bases,
                                                int max_check) {
  if (bases.empty()) throw NotAMatroid("basis list is empty");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  int r = popcount(bases.front());
  for (uint32_t b : bases) {
    if ((b & ~ground) != 0) throw NotAMatroid("basis leaves the ground set");
    if (popcount(b) != r) throw NotAMatroid("bases of unequal size");
  }
  if (popcount(ground) <= max_check && !exchange_ok(bases)) {
    throw NotAMatroid("basis exchange axiom fails");
  }
  LabeledMatroid m;
  m.ground_ = ground;
  m.bases_ = std::move(bases);
  m.rank_ = r;
  return m;
}

LabeledMatroid LabeledMatroid::from_bases(
    int n, const std::vector<std::vector<int>>& bases) {
  if (n < 0 || n > 32) throw NotAMatroid("ground size out of range");
  uint32_t ground = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<uint32_t> masks;
  for (const auto& b : bases) {
    uint32_t m = 0;
    for (int e : b) {
      if (e < 1 || e > n) throw NotAMatroid("basis element out of range");
      m |= bit(e);
    }
    if (popcount(m) != static_cast<int>(b.size())) {
      throw NotAMatroid("repeated element inside a basis");
    }
    masks.push_back(m);
  }
  return from_basis_masks(ground, std::move(masks));
}

int LabeledMatroid::n_elements() const { return popcount(ground_); }

std::vector<std::vector<int>> LabeledMatroid::bases_as_sets() const {
  std::vector<std::vector<int>> out;
  out.reserve(bases_.size());
  for (uint32_t b : bases_) out.push_back(elements_of(b));
  return out;
}

int LabeledMatroid::rank_of(uint32_t subset) const {
  subset &= ground_;
  int best = 0;
  for (uint32_t b : bases_) best = std::max(best, popcount(b & subset));
  return best;
}

bool LabeledMatroid::is_basis(uint32_t mask) const {
  return std::binary_search(bases_.begin(), bases_.end(), mask);
}

bool LabeledMatroid::is_independent(uint32_t mask) const {
  return rank_of(mask) == popcount(mask);
}

std::vector<uint32_t> LabeledMatroid::circuits() const {
  std::vector<uint32_t> out;
  // A circuit is dependent with every one-element deletion independent.
  uint32_t g = ground_;
  for (uint32_t s = g;; s = (s - 1) & g) {
    if (s != 0 && !is_independent(s)) {
      bool minimal = true;
      for (uint32_t x = s; x && minimal;) {
        uint32_t eb = x & (x ^ (x - 1));
        x &= x - 1;
        minimal = is_independent(s & ~eb);
      }
      if (minimal) out.push_back(s);
    }
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint32_t LabeledMatroid::loops() const {
  uint32_t covered = 0;
  for (uint32_t b : bases_) covered |= b;
  uint32_t l = 0;
  for (int e : elements_of(ground_ & ~covered)) {
    if (rank_of(bit(e)) == 0) l |= bit(e);
  }
  return l;
}

bool LabeledMatroid::is_loop(int e) const { return rank_of(bit(e)) == 0; }

bool LabeledMatroid::is_coloop(int e) const {
  for (uint32_t b : bases_) {
    if (!(b & bit(e))) return false;
  }
  return true;
}

std::vector<std::vector<int>> LabeledMatroid::parallel_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<int> elems = elements_of(ground_ & ~loops());
  std::vector<bool> placed(elems.size(), false);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (placed[i]) continue;
    std::vector<int> cls{elems[i]};
    placed[i] = true;
    for (size_t j = i + 1; j < elems.size(); ++j) {
      if (!placed[j] && rank_of(bit(elems[i]) | bit(elems[j])) == 1) {
        cls.push_back(elems[j]);
        placed[j] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool LabeledMatroid::is_simple() const {
  if (loops() != 0) return false;
  for (const auto& cls : parallel_classes()) {
    if (cls.size() > 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> LabeledMatroid::components() const {
  // Chain fundamental circuits with respect to one fixed basis; the union
  // classes are exactly the connectivity components.
  std::vector<int> elems = elements_of(ground_);
  std::vector<int> parent(elems.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto idx = [&](int e) {
    return static_cast<size_t>(std::lower_bound(elems.begin(), elems.end(),
                                                e) -
                               elems.begin());
  };
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  if (!bases_.empty() && !elems.empty()) {
    uint32_t b0 = bases_.front();
    for (int e : elems) {
      uint32_t eb = bit(e);
      if (b0 & eb) continue;
      if (rank_of(eb) == 0) continue;  // loop: stays a singleton
      for (int f : elements_of(b0)) {
        uint32_t cand = (b0 & ~bit(f)) | eb;
        if (is_basis(cand)) unite(static_cast<int>(idx(e)),
                                  static_cast<int>(idx(f)));
      }
    }
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> root_to_comp(elems.size(), -1);
  for (size_t i = 0; i < elems.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (root_to_comp[r] < 0) {
      root_to_comp[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[root_to_comp[r]].push_back(elems[i]);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

int LabeledMatroid::component_count() const {
  return static_cast<int>(components().size());
}

LabeledMatroid LabeledMatroid::dual() const {
  std::vector<uint32_t> cobases;
  cobases.reserve(bases_.size());
  for (uint32_t b : bases_) cobases.push_back(ground_ & ~b);
  return from_basis_masks(ground_, std::move(cobases), 0);
}

LabeledMatroid LabeledMatroid::delete_set(uint32_t d) const {
  uint32_t a = ground_ & ~d;
  int r = rank_of(a);
  std::vector<uint32_t> nb;
  for (uint32_t b : bases_) {
    uint32_t proj = b & a;
    if (popcount(proj) == r) nb.push_back(proj);
  }
  return from_basis_masks(a, std::move(nb), 0);
}

LabeledMatroid LabeledMatroid::contract_set(uint32_t c) const {
  c &= ground_;
  int rc = rank_of(c);
  std::vector<uint32_t> nb;
  for (uint32_t b : bases_) {
    if (popcount(b & c) == rc) nb.push_back(b & ~c);
  }
  return from_basis_masks(ground_ & ~c, std::move(nb), 0);
}

LabeledMatroid LabeledMatroid::deleted(int e) const {
  if (!(ground_ & bit(e))) throw InvalidSite("element not in ground set");
  return delete_set(bit(e));
}

LabeledMatroid LabeledMatroid::contracted(int e) const {
  if (!(ground_ & bit(e))) throw InvalidSite("element not in ground set");
  return contract_set(bit(e));
}

LabeledMatroid LabeledMatroid::simplified() const {
  uint32_t drop = loops();
  for (const auto& cls : parallel_classes()) {
    for (size_t i = 1; i < cls.size(); ++i) drop |= bit(cls[i]);
  }
  return delete_set(drop);
}

LabeledMatroid LabeledMatroid::relabeled(const std::vector<int>& perm) const {
  auto map_mask = [&](uint32_t m) {
    uint32_t out = 0;
    for (int e : elements_of(m)) {
      int img = perm.at(static_cast<size_t>(e));
      out |= bit(img);
    }
    return out;
  };
  std::vector<uint32_t> nb;
  nb.reserve(bases_.size());
  for (uint32_t b : bases_) nb.push_back(map_mask(b));
  return from_basis_masks(map_mask(ground_), std::move(nb), 0);
}

std::string LabeledMatroid::to_string() const {
  std::ostringstream os;
  os << "M(ground={";
  auto es = elements_of(ground_);
  for (size_t i = 0; i < es.size(); ++i) os << (i ? "," : "") << es[i];
  os << "}, bases=[";
  for (size_t i = 0; i < bases_.size(); ++i) {
    os << (i ? "," : "") << "{";
    auto bs = elements_of(bases_[i]);
    for (size_t j = 0; j < bs.size(); ++j) os << (j ? "," : "") << bs[j];
    os << "}";
  }
  os << "])";
  return os.str();
}

LabeledMatroid direct_sum(const LabeledMatroid& a, const LabeledMatroid& b) {
  if (a.ground() & b.ground()) {
    throw InvalidSite("direct sum needs disjoint ground sets");
  }
  std::vector<uint32_t> nb;
  nb.reserve(a.basis_masks().size() * b.basis_masks().size());
  for (uint32_t x : a.basis_masks()) {
    for (uint32_t y : b.basis_masks()) nb.push_back(x | y);
  }
  return LabeledMatroid::from_basis_masks(a.ground() | b.ground(),
                                          std::move(nb), 0);
}

LabeledMatroid parallel_extension(const LabeledMatroid& m, int at,
                                  int new_element) {
  uint32_t ab = bit(at), nb = bit(new_element);
  if (!(m.ground() & ab)) throw InvalidSite("site not in ground set");
  if (m.ground() & nb) throw InvalidSite("new element already present");
  if (m.is_loop(at)) throw InvalidSite("cannot add parallel to a loop");
  std::vector<uint32_t> bases = m.basis_masks();
  for (uint32_t b : m.basis_masks()) {
    if (b & ab) bases.push_back((b & ~ab) | nb);
  }
  return LabeledMatroid::from_basis_masks(m.ground() | nb, std::move(bases),
                                          0);
}

LabeledMatroid series_extension(const LabeledMatroid& m, int at,
                                int new_element) {
  if (!(m.ground() & bit(at))) throw InvalidSite("site not in ground set");
  if (m.is_coloop(at)) throw InvalidSite("cannot add in series at a coloop");
  return parallel_extension(m.dual(), at, new_element).dual();
}

LabeledMatroid single_loop(int e) {
  return LabeledMatroid::from_basis_masks(bit(e), {0u}, 2);
}

LabeledMatroid single_coloop(int e) {
  return LabeledMatroid::from_basis_masks(bit(e), {bit(e)}, 2);
}

LabeledMatroid uniform_matroid(int r, int n) {
  if (r < 0 || n < 0 || r > n || n > 20) {
    throw NotAMatroid("bad uniform matroid parameters");
  }
  uint32_t ground = (n == 0) ? 0u : (1u << n) - 1;
  std::vector<uint32_t> bases;
  for (uint32_t s = ground;; s = (s - 1) & ground) {
    if (popcount(s) == r) bases.push_back(s);
    if (s == 0) break;
  }
  return LabeledMatroid::from_basis_masks(ground, std::move(bases), 0);
}

LabeledMatroid graphic_matroid(
    int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  int m = static_cast<int>(edges.size());
  if (m > 20) throw TooLarge("graphic matroid limited to 20 edges");
  auto forest_size = [&](uint32_t subset) {
    std::vector<int> parent(n_vertices + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int size = 0;
    bool acyclic = true;
    for (int i = 0; i < m; ++i) {
      if (!(subset & (1u << i))) continue;
      int u = find(edges[static_cast<size_t>(i)].first);
      int v = find(edges[static_cast<size_t>(i)].second);
      if (u == v) {
        acyclic = false;
        break;
      }
      parent[u] = v;
      ++size;
    }
    return acyclic ? size : -1;
  };
  uint32_t ground = (m == 0) ? 0u : (1u << m) - 1;
  int rank = forest_size(0);
  std::vector<uint32_t> maximal;
  for (uint32_t s = ground;; s = (s - 1) & ground) {
    int fs = forest_size(s);
    if (fs > rank) {
      rank = fs;
      maximal.clear();
    }
    if (fs == rank) maximal.push_back(s);
    if (s == 0) break;
  }
  return LabeledMatroid::from_basis_masks(ground, std::move(maximal), 0);
}

namespace {

bool isomorphic_to(const LabeledMatroid& m, const LabeledMatroid& target) {
  if (m.n_elements() != target.n_elements()) return false;
  if (m.rank() != target.rank()) return false;
  if (m.basis_masks().size() != target.basis_masks().size()) return false;
  std::vector<int> src = elements_of(m.ground());
  std::vector<int> dst = elements_of(target.ground());
  std::vector<int> order(src.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<int> perm(33, 0);
    for (size_t i = 0; i < src.size(); ++i) {
      perm[static_cast<size_t>(src[i])] = dst[static_cast<size_t>(order[i])];
    }
    if (m.relabeled(perm) == target) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

bool has_excluded_minor(const LabeledMatroid& m) {
  static const LabeledMatroid u24 = uniform_matroid(2, 4);
  static const LabeledMatroid mk4 = graphic_matroid(
      4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  uint32_t g = m.ground();
  int n = m.n_elements();
  for (int target_size : {4, 6}) {
    if (n < target_size) continue;
    const LabeledMatroid& target = target_size == 4 ? u24 : mk4;
    // Choose the minor's ground set K, then split the rest into a
    // contracted part and a deleted part.
    for (uint32_t k = g;; k = (k - 1) & g) {
      if (popcount(k) == target_size) {
        uint32_t rest = g & ~k;
        for (uint32_t c = rest;; c = (c - 1) & rest) {
          LabeledMatroid minor = m.contract_set(c).delete_set(rest & ~c);
          if (isomorphic_to(minor, target)) return true;
          if (c == 0) break;
        }
      }
      if (k == 0) break;
    }
  }
  return false;
}

std::vector<LabeledMatroid> all_matroids(int n) {
  if (n < 1) throw UsageError("need at least one element");
  if (n > 5) throw CapExceeded("all_matroids supports n <= 5");
  uint32_t ground = (1u << n) - 1;
  std::vector<LabeledMatroid> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<uint32_t> rsets;
    for (uint32_t s = ground;; s = (s - 1) & ground) {
      if (popcount(s) == r) rsets.push_back(s);
      if (s == 0) break;
    }
    std::sort(rsets.begin(), rsets.end());
    uint32_t families = 1u << rsets.size();
    for (uint32_t f = 1; f < families; ++f) {
      std::vector<uint32_t> bases;
      for (size_t i = 0; i < rsets.size(); ++i) {
        if (f & (1u << i)) bases.push_back(rsets[i]);
      }
      if (exchange_ok(bases)) {
        out.push_back(
            LabeledMatroid::from_basis_masks(ground, std::move(bases), 0));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dkl
