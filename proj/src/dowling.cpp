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

#include "dkl/dowling.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace dkl {

namespace {

uint32_t bit(int e) { return 1u << (e - 1); }

int popcount(uint32_t m) { return std::popcount(m); }

int min_element_of(uint32_t mask) { return std::countr_zero(mask) + 1; }

std::vector<int> elements_of(uint32_t mask) {
  std::vector<int> out;
  for (int e = 1; e <= 32; ++e) {
    if (mask & bit(e)) out.push_back(e);
  }
  return out;
}

}  // namespace

bool PartialGPartition::operator<(const PartialGPartition& o) const {
  if (n != o.n) return n < o.n;
  if (rank() != o.rank()) return rank() < o.rank();
  if (support != o.support) return support < o.support;
  if (blocks != o.blocks) return blocks < o.blocks;
  return labels < o.labels;
}

std::string PartialGPartition::to_string(const FiniteGroup& g) const {
  std::ostringstream os;
  os << "{";
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << " | ";
    auto es = elements_of(blocks[b]);
    for (size_t i = 0; i < es.size(); ++i) {
      if (i) os << " ";
      os << es[i] << ":" << labels[static_cast<size_t>(es[i])];
    }
  }
  os << "}";
  (void)g;
  return os.str();
}

PartialGPartition canonical_partition(int n, const FiniteGroup& g,
                                      uint32_t support,
                                      std::vector<uint32_t> blocks,
                                      const std::vector<int>& labels) {
  PartialGPartition f;
  f.n = n;
  f.support = support;
  std::sort(blocks.begin(), blocks.end(),
            [](uint32_t a, uint32_t b) {
              return min_element_of(a) < min_element_of(b);
            });
  f.blocks = std::move(blocks);
  f.labels.assign(static_cast<size_t>(n) + 1, g.identity());
  uint32_t seen = 0;
  for (uint32_t b : f.blocks) {
    if (b == 0 || (b & ~support) || (b & seen)) {
      throw UsageError("blocks must partition the support");
    }
    seen |= b;
    int m = min_element_of(b);
    int shift = g.inv(labels.at(static_cast<size_t>(m)));
    for (int e : elements_of(b)) {
      f.labels[static_cast<size_t>(e)] =
          g.mul(shift, labels.at(static_cast<size_t>(e)));
    }
  }
  if (seen != support) throw UsageError("blocks must cover the support");
  return f;
}

FlatType flat_type_of(const PartialGPartition& f) {
  FlatType t;
  t.n0 = f.n - popcount(f.support);
  for (uint32_t b : f.blocks) t.block_sizes.push_back(popcount(b));
  std::sort(t.block_sizes.begin(), t.block_sizes.end());
  return t;
}

namespace {

void partitions_of(int m, int max_part, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
  if (m == 0) {
    std::vector<int> p = current;
    std::sort(p.begin(), p.end());
    out.push_back(std::move(p));
    return;
  }
  for (int part = std::min(m, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_of(m - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<FlatType> flat_types(int n) {
  std::vector<FlatType> out;
  for (int n0 = 0; n0 <= n; ++n0) {
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    partitions_of(n - n0, n - n0 == 0 ? 1 : n - n0, current, parts);
    for (auto& p : parts) {
      FlatType t;
      t.n0 = n0;
      t.block_sizes = std::move(p);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QPoly flat_count(const FlatType& type, int n) {
  int total = type.n0;
  for (int s : type.block_sizes) total += s;
  if (total != n) throw UsageError("flat type does not fit ground size");
  Int numer;
  mpz_fac_ui(numer.get_mpz_t(), static_cast<unsigned long>(n));
  Int denom;
  mpz_fac_ui(denom.get_mpz_t(), static_cast<unsigned long>(type.n0));
  int qexp = 0;
  std::map<int, int> mult;
  for (int s : type.block_sizes) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(s));
    denom *= f;
    qexp += s - 1;
    ++mult[s];
  }
  for (const auto& [size, count] : mult) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(count));
    denom *= f;
  }
  Int coeff = numer / denom;
  return QPoly::monomial(qexp, coeff);
}

QPoly whitney(int n, int k_blocks) {
  return whitney_row(n)[static_cast<size_t>(k_blocks)];
}

std::vector<QPoly> whitney_row(int n) {
  std::vector<QPoly> row(static_cast<size_t>(n) + 1);
  for (const FlatType& t : flat_types(n)) {
    row[t.block_sizes.size()] += flat_count(t, n);
  }
  return row;
}

std::vector<PartialGPartition> enumerate_flats(int n, const FiniteGroup& g) {
  std::vector<PartialGPartition> out;
  if (n == 0) {
    PartialGPartition empty;
    empty.n = 0;
    empty.labels.assign(1, g.identity());
    out.push_back(std::move(empty));
    return out;
  }
  uint32_t full = (1u << n) - 1;
  for (uint32_t support = full;; support = (support - 1) & full) {
    std::vector<int> elems = elements_of(support);
    int s = static_cast<int>(elems.size());
    // Set partitions of the support by restricted growth strings; block
    // indices are ordered by first appearance, hence by minimum element.
    std::vector<int> rgs(static_cast<size_t>(std::max(s, 1)), 0);
    bool partitions_done = s == 0;
    while (true) {
      std::vector<uint32_t> blocks;
      if (s > 0) {
        int nblocks = *std::max_element(rgs.begin(), rgs.begin() + s) + 1;
        blocks.assign(static_cast<size_t>(nblocks), 0);
        for (int i = 0; i < s; ++i) {
          blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])] |=
              bit(elems[static_cast<size_t>(i)]);
        }
      }
      // Non-minimum elements of each block take every label.
      std::vector<int> free_elems;
      for (uint32_t b : blocks) {
        auto es = elements_of(b);
        for (size_t i = 1; i < es.size(); ++i) free_elems.push_back(es[i]);
      }
      std::vector<int> counter(free_elems.size(), 0);
      while (true) {
        PartialGPartition f;
        f.n = n;
        f.support = support;
        f.blocks = blocks;
        f.labels.assign(static_cast<size_t>(n) + 1, g.identity());
        for (size_t i = 0; i < free_elems.size(); ++i) {
          f.labels[static_cast<size_t>(free_elems[i])] = counter[i];
        }
        out.push_back(std::move(f));
        size_t i = 0;
        for (; i < free_elems.size(); ++i) {
          if (counter[i] + 1 < g.order()) {
            ++counter[i];
            break;
          }
          counter[i] = 0;
        }
        if (i == free_elems.size()) break;
      }
      if (partitions_done) break;
      int i = s - 1;
      for (; i > 0; --i) {
        int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
        if (rgs[static_cast<size_t>(i)] <= prefix_max) break;
      }
      if (i == 0) break;
      ++rgs[static_cast<size_t>(i)];
      std::fill(rgs.begin() + i + 1, rgs.begin() + s, 0);
    }
    if (support == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

DowlingLattice::DowlingLattice(int n, FiniteGroup g, LatticeCaps caps)
    : n_(n), g_(std::move(g)) {
  if (n < 1) throw UsageError("lattice needs at least one element");
  if (n > caps.max_n) {
    throw CapExceeded("lattice ground size capped at " +
                      std::to_string(caps.max_n));
  }
  if (g_.order() > caps.max_group_order) {
    throw CapExceeded("lattice group order capped at " +
                      std::to_string(caps.max_group_order));
  }
  Int predicted = 0;
  for (int k = 0; k <= n; ++k) {
    predicted += qpoly_eval(whitney(n, k), Int(g_.order()));
  }
  if (predicted > caps.max_flats) {
    throw CapExceeded("lattice would have " + predicted.get_str() + " flats");
  }
  flats_ = enumerate_flats(n, g_);
  for (size_t i = 0; i < flats_.size(); ++i) {
    index_[flats_[i]] = static_cast<int>(i);
    if (flats_[i].rank() == 0) bottom_ = static_cast<int>(i);
    if (flats_[i].rank() == n) top_ = static_cast<int>(i);
  }
  sub_flats_.resize(static_cast<size_t>(n) + 1);
  for (int k = 0; k < n; ++k) sub_flats_[static_cast<size_t>(k)] = enumerate_flats(k, g_);
  sub_flats_[static_cast<size_t>(n)] = flats_;
}

int DowlingLattice::index_of(const PartialGPartition& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return -1;
  return it->second;
}

bool DowlingLattice::leq(const PartialGPartition& a,
                         const PartialGPartition& b) const {
  if (b.support & ~a.support) return false;
  for (uint32_t ab : a.blocks) {
    uint32_t inside = ab & b.support;
    if (inside == 0) continue;  // block deleted on the way up
    if (inside != ab) return false;  // blocks are deleted whole
    // Find the b-block containing this a-block.
    uint32_t host = 0;
    for (uint32_t bb : b.blocks) {
      if (bb & ab) {
        host = bb;
        break;
      }
    }
    if ((ab & ~host) != 0) return false;
    // Labels must agree up to one left translation on the a-block; the
    // translation is pinned by the a-block minimum, which carries the
    // identity in a's canonical form.
    int m = min_element_of(ab);
    int w = b.labels[static_cast<size_t>(m)];
    for (int e : elements_of(ab)) {
      if (b.labels[static_cast<size_t>(e)] !=
          g_.mul(w, a.labels[static_cast<size_t>(e)])) {
        return false;
      }
    }
  }
  return true;
}

bool DowlingLattice::leq(int a, int b) const {
  return leq(flats_[static_cast<size_t>(a)], flats_[static_cast<size_t>(b)]);
}

std::vector<int> DowlingLattice::strictly_above(int index) const {
  const PartialGPartition& f = flats_[static_cast<size_t>(index)];
  int k = static_cast<int>(f.blocks.size());
  std::vector<int> out;
  // Flats above f correspond to partial G-partitions of f's block list.
  for (const PartialGPartition& pi : sub_flats_[static_cast<size_t>(k)]) {
    if (pi.rank() == 0) continue;  // the bottom maps to f itself
    std::vector<uint32_t> blocks;
    uint32_t support = 0;
    std::vector<int> labels(static_cast<size_t>(n_) + 1, g_.identity());
    for (uint32_t pib : pi.blocks) {
      uint32_t merged = 0;
      for (int i : elements_of(pib)) {
        uint32_t ab = f.blocks[static_cast<size_t>(i - 1)];
        merged |= ab;
        int u = pi.labels[static_cast<size_t>(i)];
        for (int e : elements_of(ab)) {
          labels[static_cast<size_t>(e)] =
              g_.mul(u, f.labels[static_cast<size_t>(e)]);
        }
      }
      blocks.push_back(merged);
      support |= merged;
    }
    PartialGPartition up =
        canonical_partition(n_, g_, support, std::move(blocks), labels);
    int j = index_of(up);
    if (j < 0) throw Error("generated flat missing from the lattice");
    out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> DowlingLattice::census() const {
  std::vector<long> counts(static_cast<size_t>(n_) + 1, 0);
  for (const auto& f : flats_) ++counts[static_cast<size_t>(f.rank())];
  return counts;
}

GammaElement::GammaElement(const FiniteGroup& g, std::vector<int> translations,
                           std::vector<int> sigma, GroupAutomorphism phi)
    : translations_(std::move(translations)),
      sigma_(std::move(sigma)),
      phi_(std::move(phi)) {
  size_t n = sigma_.size() - 1;
  if (translations_.size() != n + 1) {
    throw UsageError("translation vector has wrong length");
  }
  std::vector<bool> seen(n + 1, false);
  for (size_t i = 1; i <= n; ++i) {
    int v = sigma_[i];
    if (v < 1 || v > static_cast<int>(n) || seen[static_cast<size_t>(v)]) {
      throw UsageError("sigma is not a permutation");
    }
    seen[static_cast<size_t>(v)] = true;
    if (translations_[i] < 0 || translations_[i] >= g.order()) {
      throw UsageError("translation out of range");
    }
  }
}

GammaElement GammaElement::identity(const FiniteGroup& g, int n) {
  std::vector<int> t(static_cast<size_t>(n) + 1, g.identity());
  std::vector<int> s(static_cast<size_t>(n) + 1);
  std::iota(s.begin(), s.end(), 0);
  return GammaElement(g, std::move(t), std::move(s),
                      GroupAutomorphism::identity(g));
}

GammaElement GammaElement::compose(const FiniteGroup& g,
                                   const GammaElement& other) const {
  size_t n = sigma_.size() - 1;
  std::vector<int> t(n + 1, g.identity());
  std::vector<int> s(n + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    t[i] = g.mul(phi_.apply(other.translations_[i]),
                 translations_[static_cast<size_t>(
                     other.sigma_[i])]);
    s[i] = sigma_[static_cast<size_t>(other.sigma_[i])];
  }
  std::vector<int> phi_images(static_cast<size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a) {
    phi_images[static_cast<size_t>(a)] = phi_.apply(other.phi_.apply(a));
  }
  return GammaElement(g, std::move(t), std::move(s),
                      GroupAutomorphism(g, std::move(phi_images)));
}

PartialGPartition gamma_apply(const FiniteGroup& g, const GammaElement& gamma,
                              const PartialGPartition& f) {
  int n = f.n;
  const auto& sigma = gamma.sigma();
  std::vector<int> sigma_inv(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    sigma_inv[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = i;
  }
  uint32_t support = 0;
  for (int e : elements_of(f.support)) {
    support |= bit(sigma[static_cast<size_t>(e)]);
  }
  std::vector<uint32_t> blocks;
  for (uint32_t b : f.blocks) {
    uint32_t nb = 0;
    for (int e : elements_of(b)) nb |= bit(sigma[static_cast<size_t>(e)]);
    blocks.push_back(nb);
  }
  std::vector<int> labels(static_cast<size_t>(n) + 1, g.identity());
  for (int i : elements_of(support)) {
    int j = sigma_inv[static_cast<size_t>(i)];
    labels[static_cast<size_t>(i)] =
        g.mul(gamma.phi().apply(f.labels[static_cast<size_t>(j)]),
              gamma.translations()[static_cast<size_t>(j)]);
  }
  return canonical_partition(n, g, support, std::move(blocks), labels);
}

std::vector<std::vector<int>> orbits(
    const FiniteGroup& g, const std::vector<PartialGPartition>& items,
    const std::vector<GammaElement>& gens) {
  std::map<PartialGPartition, int> index;
  for (size_t i = 0; i < items.size(); ++i) {
    index[items[i]] = static_cast<int>(i);
  }
  std::vector<int> owner(items.size(), -1);
  std::vector<std::vector<int>> out;
  for (size_t start = 0; start < items.size(); ++start) {
    if (owner[start] >= 0) continue;
    int orbit_id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{static_cast<int>(start)};
    owner[start] = orbit_id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      out[static_cast<size_t>(orbit_id)].push_back(cur);
      for (const GammaElement& gamma : gens) {
        PartialGPartition img =
            gamma_apply(g, gamma, items[static_cast<size_t>(cur)]);
        auto it = index.find(img);
        if (it == index.end()) {
          throw UsageError("generator maps outside the item set");
        }
        if (owner[static_cast<size_t>(it->second)] < 0) {
          owner[static_cast<size_t>(it->second)] = orbit_id;
          stack.push_back(it->second);
        }
      }
    }
    std::sort(out[static_cast<size_t>(orbit_id)].begin(),
              out[static_cast<size_t>(orbit_id)].end());
  }
  return out;
}

std::vector<GammaElement> standard_generators(const FiniteGroup& g, int n) {
  std::vector<GammaElement> gens;
  for (int j = 1; j <= n; ++j) {
    for (int v = 0; v < g.order(); ++v) {
      if (v == g.identity()) continue;
      std::vector<int> t(static_cast<size_t>(n) + 1, g.identity());
      t[static_cast<size_t>(j)] = v;
      std::vector<int> s(static_cast<size_t>(n) + 1);
      std::iota(s.begin(), s.end(), 0);
      gens.emplace_back(g, std::move(t), std::move(s),
                        GroupAutomorphism::identity(g));
    }
  }
  for (int i = 1; i + 1 <= n; ++i) {
    std::vector<int> t(static_cast<size_t>(n) + 1, g.identity());
    std::vector<int> s(static_cast<size_t>(n) + 1);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[static_cast<size_t>(i)], s[static_cast<size_t>(i + 1)]);
    gens.emplace_back(g, std::move(t), std::move(s),
                      GroupAutomorphism::identity(g));
  }
  return gens;
}

}  // namespace dkl
