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
#include <doctest.h>

#include <string>
#include <vector>

#include "dkl/dowling.hpp"
#include "dkl/errors.hpp"
#include "dkl/group.hpp"
#include "dkl/klengine.hpp"
#include "dkl/qpoly.hpp"

using namespace dkl;

namespace {

TQPoly tq(std::vector<QPoly> coeffs) { return TQPoly(std::move(coeffs)); }

QPoly qp(std::vector<long> coeffs) { return qpoly_from(std::move(coeffs)); }

// Integer t-polynomial with constant q-coefficients.
TQPoly itq(const std::vector<long>& coeffs) {
  std::vector<QPoly> lifted;
  for (long c : coeffs) lifted.push_back(qpoly_const(c));
  return tq(std::move(lifted));
}

}  // namespace

TEST_CASE("symbolic engine, frozen small polynomials") {
  CHECK(dowling_pz(1).p == itq({1}));
  CHECK(dowling_pz(1).z == itq({1, 1}));

  CHECK(dowling_pz(2).p == itq({1}));
  CHECK(dowling_pz(2).z == tq({qp({1}), qp({2, 1}), qp({1})}));

  // First nontrivial correction term.
  CHECK(dowling_pz(3).p == tq({qp({1}), qp({0, 0, 1})}));
  CHECK(dowling_pz(3).z ==
        tq({qp({1}), qp({3, 3, 1}), qp({3, 3, 1}), qp({1})}));

  CHECK(dowling_pz(4).p == tq({qp({1}), qp({0, 0, 4, 1})}));
}

TEST_CASE("symbolic engine, scaled rows of the reference table") {
  // After substituting t -> t / q^2 every coefficient stays integral and
  // matches the published low-rank table.
  auto scaled = [](int n) { return scale_t_by_qsquared(dowling_pz(n).p); };

  CHECK(scaled(1) == itq({1}));
  CHECK(scaled(2) == itq({1}));
  CHECK(scaled(3) == itq({1, 1}));
  CHECK(scaled(4) == tq({qp({1}), qp({4, 1})}));
  CHECK(scaled(5) == tq({qp({1}), qp({10, 5, 1}), qp({15})}));
  CHECK(scaled(6) ==
        tq({qp({1}), qp({20, 15, 6, 1}), qp({100, 75})}));
  CHECK(scaled(7) == tq({qp({1}), qp({35, 35, 21, 7, 1}),
                         qp({385, 560, 280}), qp({735})}));
  CHECK(scaled(8) == tq({qp({1}), qp({56, 70, 56, 28, 8, 1}),
                         qp({1120, 2380, 2331, 938}),
                         qp({6720, 9345})}));
}

TEST_CASE("symbolic engine, structural invariants up to rank 12") {
  for (int n = 1; n <= 12; ++n) {
    PZResult pz = dowling_pz(n);
    CAPTURE(n);
    CHECK(pz.n == n);
    CHECK(pz.provenance == "symbolic");
    CHECK(tq_is_palindromic(pz.z, n));
    CHECK(pz.p.coeff(0) == qpoly_const(1));
    // deg P < n / 2, strictly.
    CHECK(2 * pz.p.degree_or(0) < n);
    // Z - P collects the strictly-upper contributions, so it has no
    // constant term and is monic of degree n in t.
    TQPoly known = pz.z - pz.p;
    CHECK(known.coeff(0).is_zero());
    CHECK(known.coeff(n) == qpoly_const(1));
  }
}

TEST_CASE("symbolic engine rejects out-of-range ranks") {
  CHECK_THROWS_AS(dowling_pz(0), CapExceeded);
  CHECK_THROWS_AS(dowling_pz(-3), CapExceeded);
  CHECK_THROWS_AS(dowling_pz(41), CapExceeded);
}

TEST_CASE("coefficients match weighted matroid counts") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> report = verify_theorem1(n);
    // One P line and one Z line per t-power.
    CHECK(report.size() == 2 * static_cast<size_t>(n) + 2);
    for (const std::string& line : report) {
      CHECK(line.find("[ok]") != std::string::npos);
    }
  }
}

TEST_CASE("explicit lattice engine, Boolean lattices") {
  // Rank 1: a two-element chain.
  GradedLattice chain;
  chain.ranks = {0, 1};
  chain.bottom = 0;
  chain.top = 1;
  chain.above = {{1}, {}};
  PZResult pz = pz_from_lattice(chain);
  CHECK(pz.p == itq({1}));
  CHECK(pz.z == itq({1, 1}));
  CHECK(pz.provenance == "generic");

  // Rank 2 Boolean lattice: every interval is Boolean, so P = 1 and
  // Z = (1 + t)^2.
  GradedLattice square;
  square.ranks = {0, 1, 1, 2};
  square.bottom = 0;
  square.top = 3;
  square.above = {{1, 2, 3}, {3}, {3}, {}};
  pz = pz_from_lattice(square, "boolean");
  CHECK(pz.p == itq({1}));
  CHECK(pz.z == itq({1, 2, 1}));
  CHECK(pz.provenance == "boolean");
}

TEST_CASE("explicit lattice engine on rank-3 Dowling lattices") {
  {
    DowlingLattice dl(3, make_cyclic(2));
    PZResult pz = pz_from_lattice(lattice_from_dowling(dl));
    CHECK(pz.p == itq({1, 4}));
    CHECK(pz.z == itq({1, 13, 13, 1}));
  }
  {
    // Trivial group: the rank-3 lattice of the braid arrangement.
    DowlingLattice dl(3, make_cyclic(1));
    PZResult pz = pz_from_lattice(lattice_from_dowling(dl));
    CHECK(pz.p == itq({1, 1}));
    CHECK(pz.z == itq({1, 7, 7, 1}));
  }
}

TEST_CASE("lattice engine agrees with the symbolic engine at q = |G|") {
  std::vector<FiniteGroup> groups = {make_cyclic(1), make_cyclic(2),
                                     make_cyclic(3), make_cyclic(6),
                                     make_symmetric(3)};
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> report = verify_group_independence(n, groups);
    CHECK(report.size() == groups.size());
    for (const std::string& line : report) {
      CHECK(line.find("[ok]") != std::string::npos);
    }
  }
  // Groups of equal order yield literally the same lattice invariants.
  PZResult c6 = pz_from_lattice(
      lattice_from_dowling(DowlingLattice(3, make_cyclic(6))));
  PZResult s3 = pz_from_lattice(
      lattice_from_dowling(DowlingLattice(3, make_symmetric(3))));
  CHECK(c6.p == s3.p);
  CHECK(c6.z == s3.z);
}

TEST_CASE("lattice validation rejects malformed input") {
  CHECK_THROWS_AS(pz_from_lattice(GradedLattice{}), NotGraded);

  GradedLattice bad;
  bad.ranks = {1, 2};
  bad.bottom = 0;
  bad.top = 1;
  bad.above = {{1}, {}};
  // Bottom must sit at rank zero.
  CHECK_THROWS_AS(pz_from_lattice(bad), NotGraded);

  bad.ranks = {0, 1};
  bad.above = {{}, {}};
  // The upper set of the bottom misses the top.
  CHECK_THROWS_AS(pz_from_lattice(bad), NotGraded);

  bad.above = {{1}, {0}};
  // Strictly-above edge pointing down in rank.
  CHECK_THROWS_AS(pz_from_lattice(bad), NotGraded);

  GradedLattice square;
  square.ranks = {0, 1, 1, 2};
  square.bottom = 0;
  square.top = 3;
  square.above = {{1, 2, 3}, {3}, {3}, {}};
  CHECK_THROWS_AS(pz_from_lattice(square, "generic", 3), TooLarge);
}
