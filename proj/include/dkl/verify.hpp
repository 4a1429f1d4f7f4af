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

#ifndef DKL_VERIFY_HPP_
#define DKL_VERIFY_HPP_

#include <string>
#include <vector>

#include "dkl/qpoly.hpp"

namespace dkl {

// Cross-checks between the generating-function module and direct
// enumeration: series_C vs connected pieces, series_A/series_S vs the
// full and simple enumerations, and the weighted series at small q vs the
// weighted count tables.  Returns report lines; throws Mismatch.
std::vector<std::string> verify_genfun_bridge(int max_n,
                                              const std::vector<int>& qs);

// |g_labelings(M, G)| = |G|^{n - c(M)} over all enumerated matroids for
// n <= max_n and the given group orders (cyclic), plus the fixed
// four-vertex, five-edge graphic matroid whose order-2 labeling classes
// number sixteen.  Returns report lines; throws Mismatch.
std::vector<std::string> verify_labeling_counts(int max_n,
                                                const std::vector<int>& orders);

// The closed-form count of connected simple pieces on 2m-1 elements of
// rank m: (2m-3)!!(2m-1)^{m-2}, checked against enumeration for
// m <= max_m_enum and against the leading coefficient of the symbolic
// KL polynomial (times q^{2m-2}) for m <= max_m_symbolic.
std::vector<std::string> verify_leading_coefficients(int max_m_enum,
                                                     int max_m_symbolic);

// The closed-form value (2m-3)!! (2m-1)^{m-2}.
Int leading_count_formula(int m);

}  // namespace dkl

#endif  // DKL_VERIFY_HPP_
