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

#ifndef DKL_QSP_HPP_
#define DKL_QSP_HPP_

#include <map>
#include <vector>

#include "dkl/group.hpp"
#include "dkl/matroid.hpp"
#include "dkl/qpoly.hpp"

namespace dkl {

// Enumeration sizes are capped (default 8 elements) because the counts are
// exponential; the cap is an explicit parameter everywhere.
inline constexpr int kDefaultEnumCap = 8;

// Connected series-parallel matroids on exactly {1..n}: breadth-first
// closure of series/parallel extensions from the one-element matroids,
// inserting the remaining labels in all ways.  Sorted canonically.
std::vector<LabeledMatroid> connected_sp(int n, int cap = kDefaultEnumCap);

// Connected series-parallel matroids on every nonempty subset of {1..n},
// keyed by ground mask.  connected_sp(n) is the entry at the full mask.
std::map<uint32_t, std::vector<LabeledMatroid>> connected_sp_by_support(
    int n, int cap = kDefaultEnumCap);

// Quasi-series-parallel matroids on {1..n}: direct sums of connected
// series-parallel matroids over set partitions of the ground set
// (restricted-growth order, then canonical sort).
std::vector<LabeledMatroid> qsp_all(int n, int cap = kDefaultEnumCap);
std::vector<LabeledMatroid> qsp_simple(int n, int cap = kDefaultEnumCap);

// Weighted counts: for each rank r, the polynomial sum of q^{n - c(M)}
// over enumerated matroids of rank r.
struct WeightedCountTable {
  int n = 0;
  std::vector<QPoly> count_all;     // index = rank
  std::vector<QPoly> count_simple;  // index = rank
};
WeightedCountTable weighted_counts(int n, int cap = kDefaultEnumCap);

// Labeling of a matroid's ground set by group-element indices, canonical:
// the minimum element of every connected component carries the identity.
struct GLabeling {
  LabeledMatroid matroid;
  std::vector<int> labels;  // indexed by element, slot 0 unused

  bool operator==(const GLabeling& o) const {
    return matroid == o.matroid && labels == o.labels;
  }
  bool operator<(const GLabeling& o) const {
    if (!(matroid == o.matroid)) return matroid < o.matroid;
    return labels < o.labels;
  }
};

// Canonicalizes an arbitrary labeling by left-translating per component.
GLabeling canonical_labeling(const LabeledMatroid& m, const FiniteGroup& g,
                             const std::vector<int>& labels);

// All equivalence classes of labelings of m by g, canonical form; there
// are |g|^{n - c(m)} of them.  Capped to keep materialization bounded.
std::vector<GLabeling> g_labelings(const LabeledMatroid& m,
                                   const FiniteGroup& g);

}  // namespace dkl

#endif  // DKL_QSP_HPP_
