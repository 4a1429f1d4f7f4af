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

#ifndef DKL_MATROID_HPP_
#define DKL_MATROID_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dkl/errors.hpp"

namespace dkl {

// Matroid on a labeled ground set, elements 1-based; element e occupies
// bit e-1 of a mask.  Ground sets are arbitrary subsets of {1..32} so that
// minors and extensions keep their labels.  Equality is label-sensitive:
// same ground mask and same sorted basis list.
class LabeledMatroid {
 public:
  // Basis exchange is validated for ground sets of at most max_check
  // elements (default 12); beyond that construction trusts the caller.
  static LabeledMatroid from_basis_masks(uint32_t ground,
                                         std::vector<uint32_t> bases,
                                         int max_check = 12);
  // Ground set {1..n}; bases listed as sorted element vectors.
  static LabeledMatroid from_bases(int n,
                                   const std::vector<std::vector<int>>& bases);

  uint32_t ground() const { return ground_; }
  int n_elements() const;
  const std::vector<uint32_t>& basis_masks() const { return bases_; }
  int rank() const { return rank_; }
  std::vector<std::vector<int>> bases_as_sets() const;

  bool operator==(const LabeledMatroid& o) const {
    return ground_ == o.ground_ && bases_ == o.bases_;
  }
  bool operator<(const LabeledMatroid& o) const {
    if (ground_ != o.ground_) return ground_ < o.ground_;
    return bases_ < o.bases_;
  }

  // Rank of an arbitrary subset of the ground set.
  int rank_of(uint32_t subset) const;
  bool is_basis(uint32_t mask) const;
  bool is_independent(uint32_t mask) const;

  std::vector<uint32_t> circuits() const;
  uint32_t loops() const;
  bool is_loop(int e) const;
  bool is_coloop(int e) const;
  // Parallel classes of the non-loop elements, each sorted, classes sorted
  // by minimum element.
  std::vector<std::vector<int>> parallel_classes() const;
  bool is_simple() const;
  // Partition of the ground set into connected components (sorted element
  // lists, sorted by minimum).  Loops and coloops are singleton components;
  // a one-element matroid is connected.
  std::vector<std::vector<int>> components() const;
  int component_count() const;

  LabeledMatroid dual() const;
  LabeledMatroid deleted(int e) const;
  LabeledMatroid contracted(int e) const;
  LabeledMatroid delete_set(uint32_t d) const;
  LabeledMatroid contract_set(uint32_t c) const;
  // Deletes loops and all but the minimum element of each parallel class.
  LabeledMatroid simplified() const;
  // Relabels element e to perm[e].
  LabeledMatroid relabeled(const std::vector<int>& perm) const;

  std::string to_string() const;

 private:
  uint32_t ground_ = 0;
  std::vector<uint32_t> bases_;
  int rank_ = 0;
};

// Direct sum; ground sets must be disjoint.
LabeledMatroid direct_sum(const LabeledMatroid& a, const LabeledMatroid& b);

// Adds new_element parallel to at (at must not be a loop); the pair forms
// a circuit.  Throws InvalidSite otherwise.
LabeledMatroid parallel_extension(const LabeledMatroid& m, int at,
                                  int new_element);
// Adds new_element in series at at (at must not be a coloop); dual to
// parallel extension.  Throws InvalidSite otherwise.
LabeledMatroid series_extension(const LabeledMatroid& m, int at,
                                int new_element);

// Single-element matroids on {e}.
LabeledMatroid single_loop(int e);
LabeledMatroid single_coloop(int e);
// Uniform matroid U_{r,n} on {1..n}.
LabeledMatroid uniform_matroid(int r, int n);
// Cycle matroid of a multigraph; edge i+1 is edges[i] = {u, v} with
// 1-based vertices.
LabeledMatroid graphic_matroid(int n_vertices,
                               const std::vector<std::pair<int, int>>& edges);

// True when some minor is isomorphic to U_{2,4} or M(K_4); isomorphism by
// permutation search (minor candidates have at most 6 elements).
bool has_excluded_minor(const LabeledMatroid& m);

// Every matroid on ground set {1..n} (n <= 5), enumerated by filtering
// basis families with the exchange axiom.  Sorted canonically.
std::vector<LabeledMatroid> all_matroids(int n);

}  // namespace dkl

#endif  // DKL_MATROID_HPP_
