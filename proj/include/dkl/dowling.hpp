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

#ifndef DKL_DOWLING_HPP_
#define DKL_DOWLING_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dkl/group.hpp"
#include "dkl/qpoly.hpp"

namespace dkl {

// Flat of the rank-n Dowling geometry over a group G: a partial
// G-partition of {1..n} in canonical form.  S is the supported subset,
// blocks partition S (each block a mask, blocks sorted by minimum
// element), labels assign a group index to every element of S with the
// minimum of each block carrying the identity.  Labels off the support
// hold the identity as filler.  Rank is n minus the number of blocks.
struct PartialGPartition {
  int n = 0;
  uint32_t support = 0;
  std::vector<uint32_t> blocks;
  std::vector<int> labels;  // indexed by element, slot 0 unused

  int rank() const { return n - static_cast<int>(blocks.size()); }
  bool operator==(const PartialGPartition& o) const {
    return n == o.n && support == o.support && blocks == o.blocks &&
           labels == o.labels;
  }
  bool operator<(const PartialGPartition& o) const;
  std::string to_string(const FiniteGroup& g) const;
};

// Left-translates each block so its minimum carries the identity and
// sorts blocks by minimum element.
PartialGPartition canonical_partition(int n, const FiniteGroup& g,
                                      uint32_t support,
                                      std::vector<uint32_t> blocks,
                                      const std::vector<int>& labels);

// Type of a flat: number of unsupported elements and the multiset of
// block sizes (ascending).
struct FlatType {
  int n0 = 0;
  std::vector<int> block_sizes;

  bool operator==(const FlatType& o) const {
    return n0 == o.n0 && block_sizes == o.block_sizes;
  }
  bool operator<(const FlatType& o) const {
    if (n0 != o.n0) return n0 < o.n0;
    return block_sizes < o.block_sizes;
  }
};

FlatType flat_type_of(const PartialGPartition& f);

// All flat types for ground size n, sorted.
std::vector<FlatType> flat_types(int n);

// Number of flats of the given type, as a polynomial in the group order:
// n! / (n0! * prod sizes! * prod multiplicities!) * q^{sum (size - 1)}.
// Validated against explicit lattice censuses in the test suite.
QPoly flat_count(const FlatType& type, int n);

// Number of flats with k blocks (rank n - k), summed over types.
QPoly whitney(int n, int k_blocks);

// All block-count Whitney numbers of {1..n} at once, index = block count.
std::vector<QPoly> whitney_row(int n);

struct LatticeCaps {
  int max_n = 5;
  int max_group_order = 6;
  // Upper bound on the number of flats actually materialized.
  long max_flats = 200000;
};

// Explicit Dowling lattice: all flats in canonical form, sorted by
// (rank, support, blocks, labels), with the comparability predicate and
// per-flat upper sets.
class DowlingLattice {
 public:
  DowlingLattice(int n, FiniteGroup g, LatticeCaps caps = LatticeCaps());

  int n() const { return n_; }
  const FiniteGroup& group() const { return g_; }
  const std::vector<PartialGPartition>& flats() const { return flats_; }
  int size() const { return static_cast<int>(flats_.size()); }
  int rank_of(int index) const { return flats_[index].rank(); }
  int index_of(const PartialGPartition& f) const;
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Closed-form order predicate: a <= b iff b's support is a union of
  // a-blocks, every b-block is a union of a-blocks, and on each a-block
  // the labels agree up to one left translation.
  bool leq(int a, int b) const;
  bool leq(const PartialGPartition& a, const PartialGPartition& b) const;

  // Indices of all flats strictly above the given flat, produced by
  // direct generation (merge groups of blocks, delete others, relabel).
  std::vector<int> strictly_above(int index) const;

  // Flat counts per rank, index = rank.
  std::vector<long> census() const;

 private:
  int n_;
  FiniteGroup g_;
  std::vector<PartialGPartition> flats_;
  std::map<PartialGPartition, int> index_;
  // sub_flats_[k] lists the flats of the rank-k sub-geometry; the upper
  // set of a flat with k blocks is indexed by these.
  std::vector<std::vector<PartialGPartition>> sub_flats_;
  int bottom_ = -1, top_ = -1;
};

// Canonical partial G-partitions of {1..n}, sorted; the flats of the
// Dowling lattice.
std::vector<PartialGPartition> enumerate_flats(int n, const FiniteGroup& g);

// Element of the wreath-product symmetry group: per-position right
// translations, a permutation of positions, and a group automorphism.
// Acts on flats by (gamma f)(i) = phi(f(sigma^{-1}(i))) * t[sigma^{-1}(i)].
class GammaElement {
 public:
  GammaElement(const FiniteGroup& g, std::vector<int> translations,
               std::vector<int> sigma, GroupAutomorphism phi);

  static GammaElement identity(const FiniteGroup& g, int n);

  const std::vector<int>& translations() const { return translations_; }
  const std::vector<int>& sigma() const { return sigma_; }
  const GroupAutomorphism& phi() const { return phi_; }

  // Product rule: (t, sigma, phi) * (s, tau, psi) =
  // ((phi(s_i) t_{tau(i)})_i, sigma tau, phi psi).
  GammaElement compose(const FiniteGroup& g, const GammaElement& other) const;

 private:
  std::vector<int> translations_;  // 1-based positions, slot 0 unused
  std::vector<int> sigma_;         // 1-based permutation, slot 0 unused
  GroupAutomorphism phi_;
};

PartialGPartition gamma_apply(const FiniteGroup& g, const GammaElement& gamma,
                              const PartialGPartition& f);

// Orbit partition of the given flats under the generators; returns sorted
// orbits of indices into the input list.
std::vector<std::vector<int>> orbits(const FiniteGroup& g,
                                     const std::vector<PartialGPartition>& items,
                                     const std::vector<GammaElement>& gens);

// Translations at one position, adjacent transpositions, identity
// automorphism: enough to act transitively on each flat type.
std::vector<GammaElement> standard_generators(const FiniteGroup& g, int n);

}  // namespace dkl

#endif  // DKL_DOWLING_HPP_
