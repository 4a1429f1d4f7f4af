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

#ifndef DKL_KLENGINE_HPP_
#define DKL_KLENGINE_HPP_

#include <string>
#include <vector>

#include "dkl/dowling.hpp"
#include "dkl/qpoly.hpp"

namespace dkl {

// Result of either computation path.  For the symbolic path the
// coefficients are genuine polynomials in q; for a concrete lattice they
// are constants.
struct PZResult {
  int n = 0;
  TQPoly p;
  TQPoly z;
  std::string provenance;  // "symbolic" or "generic(<group spec>)"
};

// Explicit graded bounded lattice, rank function plus strict upper sets.
struct GradedLattice {
  std::vector<int> ranks;
  int bottom = -1;
  int top = -1;
  std::vector<std::vector<int>> above;  // all indices strictly above, sorted
};

GradedLattice lattice_from_dowling(const DowlingLattice& dl);

// Generic engine: computes P for every upper interval by decreasing
// corank (corank 0 gets P = 1, otherwise the palindromic completion of
// known(t) = sum over strictly-above flats of t^{rank difference} P).
// Returns P and Z of the full lattice.  Flats of equal rank are processed
// in parallel.
PZResult pz_from_lattice(const GradedLattice& lat,
                         const std::string& provenance = "generic",
                         size_t max_flats = 50000);

// Fast symbolic path for the rank-n Dowling geometry: recursion on the
// block count k with whitney-number weights, never materializing flats.
// Coefficients are polynomials in the group order q.
PZResult dowling_pz(int n);

// Checks the coefficient-by-coefficient dimension statement: t^i of P
// equals the weighted simple count at rank n-i and t^i of Z equals the
// weighted count of all quasi-series-parallel matroids at rank n-i.
// Returns one report line per compared coefficient; throws Mismatch.
std::vector<std::string> verify_theorem1(int n);

// Cross-checks the concrete-lattice engine against the symbolic one at
// q = |G| for each group.  Returns report lines; throws Mismatch.
std::vector<std::string> verify_group_independence(
    int n, const std::vector<FiniteGroup>& groups);

}  // namespace dkl

#endif  // DKL_KLENGINE_HPP_
