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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dkl/errors.hpp"
#include "dkl/matroid.hpp"

using namespace dkl;

TEST_CASE("uniform matroids") {
  LabeledMatroid u24 = uniform_matroid(2, 4);
  CHECK(u24.n_elements() == 4);
  CHECK(u24.rank() == 2);
  CHECK(u24.basis_masks().size() == 6);
  CHECK(u24.is_simple());
  CHECK(u24.component_count() == 1);
  CHECK(u24.rank_of(0b0001) == 1);
  CHECK(u24.rank_of(0b0111) == 2);
  CHECK(u24.is_independent(0b0011));
  CHECK(!u24.is_independent(0b0111));
  // Circuits of U_{2,4}: all 3-subsets.
  CHECK(u24.circuits().size() == 4);

  LabeledMatroid u04 = uniform_matroid(0, 4);
  CHECK(u04.rank() == 0);
  CHECK(u04.loops() == 0b1111);
  CHECK(u04.component_count() == 4);
}

TEST_CASE("basis exchange validation") {
  // {1,2} and {3,4} satisfy exchange only with the mixed pairs present.
  CHECK_THROWS_AS(LabeledMatroid::from_bases(4, {{1, 2}, {3, 4}}),
                  NotAMatroid);
  CHECK_THROWS_AS(LabeledMatroid::from_bases(2, {{1}, {1, 2}}), NotAMatroid);
  CHECK_THROWS_AS(LabeledMatroid::from_bases(2, {}), NotAMatroid);
  LabeledMatroid ok = LabeledMatroid::from_bases(2, {{1}, {2}});
  CHECK(ok.rank() == 1);
  CHECK(ok.parallel_classes() == std::vector<std::vector<int>>{{1, 2}});
  CHECK(!ok.is_simple());
}

TEST_CASE("graphic matroids") {
  // Quadrilateral with one chord: five edges, rank 3, eight spanning trees.
  LabeledMatroid fig = graphic_matroid(
      4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 4}});
  CHECK(fig.n_elements() == 5);
  CHECK(fig.rank() == 3);
  CHECK(fig.basis_masks().size() == 8);
  CHECK(fig.component_count() == 1);
  CHECK(fig.is_simple());

  LabeledMatroid k4 = graphic_matroid(
      4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(k4.rank() == 3);
  CHECK(k4.basis_masks().size() == 16);

  // A self-loop is a matroid loop.
  LabeledMatroid wl = graphic_matroid(2, {{1, 1}, {1, 2}});
  CHECK(wl.is_loop(1));
  CHECK(wl.rank() == 1);
}

TEST_CASE("duality") {
  LabeledMatroid u14 = uniform_matroid(1, 4);
  CHECK(u14.dual() == uniform_matroid(3, 4));
  for (const auto& m : all_matroids(4)) {
    CHECK(m.dual().dual() == m);
    CHECK(m.dual().rank() == 4 - m.rank());
    CHECK(m.dual().component_count() == m.component_count());
  }
}

TEST_CASE("minors") {
  LabeledMatroid u24 = uniform_matroid(2, 4);
  CHECK(u24.deleted(4) == uniform_matroid(2, 3));
  // Contraction of a point in U_{2,4} leaves three parallel points.
  LabeledMatroid c = u24.contracted(4);
  CHECK(c.rank() == 1);
  CHECK(c.n_elements() == 3);
  CHECK(c.parallel_classes().size() == 1);
  CHECK(u24.delete_set(0b1100).rank() == 2);
  CHECK(u24.contract_set(0b1100).rank() == 0);
  // Rank formula of contraction: rk(M/S) = rk(M) - rk(S).
  for (const auto& m : all_matroids(3)) {
    for (uint32_t s = 0; s < 8; ++s) {
      if ((s & m.ground()) != s || s == m.ground()) continue;
      CHECK(m.contract_set(s).rank() == m.rank() - m.rank_of(s));
    }
  }
}

TEST_CASE("simplification and components") {
  // A loop on 1 plus a parallel pair on {2,3}.
  LabeledMatroid pair23 =
      LabeledMatroid::from_basis_masks(0b110, {0b010, 0b100});
  LabeledMatroid m = direct_sum(single_loop(1), pair23);
  CHECK(m.n_elements() == 3);
  CHECK(m.rank() == 1);
  CHECK(m.component_count() == 2);
  LabeledMatroid s = m.simplified();
  CHECK(s.n_elements() == 1);
  CHECK(s.rank() == 1);
}

TEST_CASE("series and parallel extensions") {
  LabeledMatroid one = single_coloop(1);
  LabeledMatroid pair = parallel_extension(one, 1, 2);
  CHECK(pair.rank() == 1);
  CHECK(pair.basis_masks().size() == 2);
  LabeledMatroid tri = series_extension(pair, 2, 3);
  CHECK(tri.rank() == 2);
  CHECK(tri.component_count() == 1);
  CHECK_THROWS_AS(parallel_extension(single_loop(1), 1, 2), InvalidSite);
  // Series at a coloop is refused.
  CHECK_THROWS_AS(series_extension(one, 1, 2), InvalidSite);
  // Element collisions are refused.
  CHECK_THROWS_AS(parallel_extension(pair, 1, 2), InvalidSite);
}

TEST_CASE("relabeling") {
  LabeledMatroid tri = graphic_matroid(3, {{1, 2}, {2, 3}, {1, 3}});
  std::vector<int> perm = {0, 2, 3, 1};  // slot 0 unused
  LabeledMatroid r = tri.relabeled(perm);
  CHECK(r.rank() == 2);
  CHECK(r.basis_masks().size() == 3);
}

TEST_CASE("excluded minors") {
  CHECK(has_excluded_minor(uniform_matroid(2, 4)));
  LabeledMatroid k4 = graphic_matroid(
      4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(has_excluded_minor(k4));
  LabeledMatroid fig = graphic_matroid(
      4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 4}});
  CHECK(!has_excluded_minor(fig));
  CHECK(!has_excluded_minor(uniform_matroid(2, 3)));
  // U_{2,5} contains U_{2,4} as a deletion.
  CHECK(has_excluded_minor(uniform_matroid(2, 5)));
}

TEST_CASE("full enumeration") {
  CHECK(all_matroids(1).size() == 2);
  CHECK(all_matroids(2).size() == 5);
  CHECK(all_matroids(3).size() == 16);
  CHECK(all_matroids(4).size() == 68);
  CHECK(all_matroids(5).size() == 406);
  CHECK_THROWS_AS(all_matroids(6), CapExceeded);
  // No duplicates.
  auto ms = all_matroids(4);
  std::set<LabeledMatroid> dedup(ms.begin(), ms.end());
  CHECK(dedup.size() == ms.size());
}
