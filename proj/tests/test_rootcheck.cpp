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

#include <vector>

#include "dkl/errors.hpp"
#include "dkl/klengine.hpp"
#include "dkl/qpoly.hpp"
#include "dkl/rootcheck.hpp"

using namespace dkl;

namespace {

QPoly qp(std::vector<long> c) { return qpoly_from(std::move(c)); }

RatPoly rpoly(std::vector<long> c) {
  std::vector<Rat> lifted;
  for (long v : c) lifted.emplace_back(v);
  return RatPoly(std::move(lifted));
}

Poly<Int> ipoly(std::vector<long> c) {
  std::vector<Int> lifted;
  for (long v : c) lifted.emplace_back(v);
  return Poly<Int>(std::move(lifted));
}

SymMatrix<QPoly> qmat(std::vector<std::vector<QPoly>> entries) {
  SymMatrix<QPoly> m;
  m.d = static_cast<int>(entries.size());
  m.entries = std::move(entries);
  return m;
}

// t-polynomial over Z[q] evaluated at q0, as an integer polynomial in t.
Poly<Int> eval_tq(const TQPoly& p, long q0) {
  std::vector<Int> c;
  for (const QPoly& coeff : p.coeffs()) c.push_back(qpoly_eval(coeff, q0));
  return Poly<Int>(std::move(c));
}

// Scaled correction polynomial of the rank-n geometry.
TQPoly scaled_p(int n) { return scale_t_by_qsquared(dowling_pz(n).p); }

}  // namespace

TEST_CASE("bezout matrix, degree-2 closed form") {
  // For f = a0 + a1 x + a2 x^2 and g = b0 + b1 x + b2 x^2 the matrix is
  // [[a1 b0 - a0 b1, a2 b0 - a0 b2], [a2 b0 - a0 b2, a2 b1 - a1 b2]].
  Poly<Int> f = ipoly({5, -3, 2});
  Poly<Int> g = ipoly({1, 4, 7});
  SymMatrix<Int> b = bezout_matrix(f, g);
  REQUIRE(b.d == 2);
  CHECK(b.entries[0][0] == Int(-3 - 20));
  CHECK(b.entries[0][1] == Int(2 - 35));
  CHECK(b.entries[1][0] == Int(2 - 35));
  CHECK(b.entries[1][1] == Int(8 + 21));

  // Degree-1 g drops the top row contribution but keeps symmetry.
  SymMatrix<Int> c = bezout_matrix(ipoly({3, 4, 1}), ipoly({2, 1}));
  REQUIRE(c.d == 2);
  CHECK(c.entries[0][0] == Int(4 * 2 - 3));
  CHECK(c.entries[0][1] == Int(2));
  CHECK(c.entries[1][1] == Int(1));
}

TEST_CASE("bezout matrix degree validation") {
  CHECK_THROWS_AS(bezout_matrix(ipoly({7}), ipoly({1, 1})), DegreeMismatch);
  CHECK_THROWS_AS(bezout_matrix(Poly<Int>(), ipoly({1, 1})), DegreeMismatch);
  CHECK_THROWS_AS(bezout_matrix(ipoly({1, 0, 0, 1}), ipoly({1, 1})),
                  DegreeMismatch);
  CHECK_THROWS_AS(bezout_matrix(ipoly({1, 1}), Poly<Int>()), DegreeMismatch);
}

TEST_CASE("worked consecutive-rank example, q basis") {
  SymMatrix<QPoly> b = bezout_matrix(scaled_p(6), scaled_p(5));
  REQUIRE(b.d == 2);
  CHECK(b.entries[0][0] == qp({10, 10, 5, 1}));
  CHECK(b.entries[0][1] == qp({85, 75}));
  CHECK(b.entries[1][0] == qp({85, 75}));
  CHECK(b.entries[1][1] == qp({700, 1025, 385, 60}));

  QPoly det = sym_matrix_det(b);
  CHECK(det == qp({-225, 4500, 11975, 10275, 3550, 685, 60}));
  CHECK(qpoly_eval(det, 1) == Int(30820));
  // The q-basis determinant has a negative constant term, so positivity
  // only appears after re-expanding around q = 1.
  CHECK(qpoly_shift_to_u(det) ==
        qp({30820, 77260, 71850, 32525, 7875, 1045, 60}));
}

TEST_CASE("full minor sweep certifies the worked example") {
  SymMatrix<QPoly> b = bezout_matrix(scaled_p(6), scaled_p(5));
  PositivityCertificate cert = all_minors_positive_in_u(b);
  CHECK(cert.certified);
  CHECK(cert.level == "full");
  CHECK(cert.dimension == 2);
  // 4 entries plus the determinant.
  CHECK(cert.minors_checked == 5);
  CHECK(cert.witness.empty());
}

TEST_CASE("full minor sweep, degenerate and failing inputs") {
  PositivityCertificate empty = all_minors_positive_in_u(SymMatrix<QPoly>());
  CHECK(empty.certified);
  CHECK(empty.dimension == 0);
  CHECK(empty.minors_checked == 0);

  CHECK(all_minors_positive_in_u(qmat({{qp({1})}})).certified);

  // q - 2 re-expands to u - 1: strictly positive fails on the constant.
  PositivityCertificate bad = all_minors_positive_in_u(qmat({{qp({-2, 1})}}));
  CHECK(!bad.certified);
  CHECK(bad.witness_rows == std::vector<int>{0});
  CHECK(bad.witness_cols == std::vector<int>{0});
  CHECK(bad.witness == "u - 1");

  SymMatrix<QPoly> big = SymMatrix<QPoly>::zero(11);
  CHECK_THROWS_AS(all_minors_positive_in_u(big), TooLarge);
}

TEST_CASE("principal and sampled fallback certificate") {
  SymMatrix<QPoly> b = bezout_matrix(scaled_p(6), scaled_p(5));
  PositivityCertificate cert = principal_and_sampled_certificate(b);
  CHECK(cert.certified);
  CHECK(cert.level == "principal+sampled");
  CHECK(cert.dimension == 2);
  CHECK(cert.minors_checked > 2);

  // Fixed seed: the sweep is reproducible.
  PositivityCertificate again = principal_and_sampled_certificate(b);
  CHECK(again.minors_checked == cert.minors_checked);

  PositivityCertificate bad =
      principal_and_sampled_certificate(qmat({{qp({-2, 1})}}));
  CHECK(!bad.certified);
  CHECK(bad.witness == "u - 1");
}

TEST_CASE("positive definiteness at integer points") {
  SymMatrix<QPoly> indefinite =
      qmat({{qp({1}), qp({2})}, {qp({2}), qp({1})}});
  CHECK(!is_positive_definite_at(indefinite, 1));
  SymMatrix<QPoly> diag = qmat({{qp({2}), qp({0})}, {qp({0}), qp({3})}});
  CHECK(is_positive_definite_at(diag, 1));
  // q on the diagonal: definite only once q is positive.
  SymMatrix<QPoly> qdiag = qmat({{qp({0, 1})}});
  CHECK(is_positive_definite_at(qdiag, 3));
  CHECK(!is_positive_definite_at(qdiag, 0));
  CHECK(is_positive_definite_at(SymMatrix<QPoly>(), 1));
}

TEST_CASE("exact determinants") {
  CHECK(sym_matrix_det(SymMatrix<QPoly>()) == qp({1}));
  CHECK(sym_matrix_det(qmat({{qp({1}), qp({2})}, {qp({2}), qp({1})}})) ==
        qp({-3}));
  // det [[q, 1], [1, q]] = q^2 - 1.
  CHECK(sym_matrix_det(qmat({{qp({0, 1}), qp({1})}, {qp({1}), qp({0, 1})}})) ==
        qp({-1, 0, 1}));
}

TEST_CASE("sturm chain on explicit polynomials") {
  SturmResult two = sturm_real_rooted(rpoly({-2, 0, 1}));
  CHECK(two.real_rooted);
  CHECK(two.distinct_real_roots == 2);
  CHECK(two.squarefree_degree == 2);

  // Repeated root: squarefree part has degree 1.
  SturmResult rep = sturm_real_rooted(rpoly({1, 2, 1}));
  CHECK(rep.real_rooted);
  CHECK(rep.distinct_real_roots == 1);
  CHECK(rep.squarefree_degree == 1);

  SturmResult none = sturm_real_rooted(rpoly({1, 0, 1}));
  CHECK(!none.real_rooted);
  CHECK(none.distinct_real_roots == 0);

  // A cubic with one real and two complex roots.
  SturmResult ctrl = sturm_real_rooted(rpoly({1, 35, 385, 735}));
  CHECK(!ctrl.real_rooted);
  CHECK(ctrl.distinct_real_roots == 1);
  CHECK(ctrl.squarefree_degree == 3);

  SturmResult constant = sturm_real_rooted(rpoly({7}));
  CHECK(constant.real_rooted);
  CHECK(constant.distinct_real_roots == 0);

  CHECK_THROWS_AS(sturm_real_rooted(RatPoly()), UsageError);
}

TEST_CASE("sturm chain on evaluated engine output") {
  // Scaled correction polynomials and the palindromic Z are real-rooted at
  // small integer q.
  for (int n = 6; n <= 10; ++n) {
    PZResult pz = dowling_pz(n);
    TQPoly sp = scale_t_by_qsquared(pz.p);
    for (long q0 = 1; q0 <= 3; ++q0) {
      CAPTURE(n);
      CAPTURE(q0);
      RatPoly pn, zn;
      for (int i = 0; i <= sp.degree_or(0); ++i) {
        pn += RatPoly::monomial(i, Rat(qpoly_eval(sp.coeff(i), q0)));
      }
      for (int i = 0; i <= n; ++i) {
        zn += RatPoly::monomial(i, Rat(qpoly_eval(pz.z.coeff(i), q0)));
      }
      CHECK(sturm_real_rooted(pn).real_rooted);
      CHECK(sturm_real_rooted(zn).real_rooted);
    }
  }
}

TEST_CASE("interlacing by positive definite bezoutians") {
  // (x+2) strictly interlaces (x+1)(x+3).
  CHECK(interlaces(ipoly({3, 4, 1}), ipoly({2, 1})));
  // Derivative of a polynomial with distinct real roots interlaces it.
  CHECK(interlaces(ipoly({8, 14, 7, 1}), ipoly({14, 14, 3})));
  // x does not interlace x^2 + 1.
  CHECK(!interlaces(ipoly({1, 0, 1}), ipoly({0, 1})));
  // Shared root: strictness fails.
  CHECK(!interlaces(ipoly({2, 3, 1}), ipoly({1, 1})));

  // Consecutive scaled correction polynomials, then consecutive Z.
  CHECK(interlaces(eval_tq(scaled_p(6), 2), eval_tq(scaled_p(5), 2)));
  CHECK(interlaces(eval_tq(dowling_pz(4).z, 2), eval_tq(dowling_pz(3).z, 2)));
  CHECK(interlaces(eval_tq(dowling_pz(8).z, 3), eval_tq(dowling_pz(7).z, 3)));
}
