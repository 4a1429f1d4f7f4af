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

#ifndef DKL_ROOTCHECK_HPP_
#define DKL_ROOTCHECK_HPP_

#include <string>
#include <vector>

#include "dkl/qpoly.hpp"

namespace dkl {

template <typename C>
struct SymMatrix {
  int d = 0;
  std::vector<std::vector<C>> entries;

  static SymMatrix zero(int d) {
    SymMatrix m;
    m.d = d;
    m.entries.assign(static_cast<size_t>(d),
                     std::vector<C>(static_cast<size_t>(d)));
    return m;
  }
};

// Bezout matrix of f (degree d >= 1) and g (degree d or d-1): the d x d
// symmetric matrix with a_{ij} = [x^i y^j] (f(x)g(y) - f(y)g(x))/(x - y),
// computed by synthetic division by (x - y).  Throws DegreeMismatch on
// degree violations.
template <typename C>
SymMatrix<C> bezout_matrix(const Poly<C>& f, const Poly<C>& g) {
  int d = f.degree_or(-1);
  int e = g.degree_or(-1);
  if (d < 1) throw DegreeMismatch("f must have degree at least 1");
  if (e != d && e != d - 1) {
    throw DegreeMismatch("deg g must be deg f or deg f - 1");
  }
  // Coefficients of x^k in f(x)g(y) - f(y)g(x), as polynomials in y.
  std::vector<Poly<C>> numer(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    numer[static_cast<size_t>(k)] = g * Poly<C>::constant(f.coeff(k)) -
                                    f * Poly<C>::constant(g.coeff(k));
  }
  // Synthetic division by (x - y): quotient rows top-down.
  std::vector<Poly<C>> rows(static_cast<size_t>(d));
  rows[static_cast<size_t>(d - 1)] = numer[static_cast<size_t>(d)];
  for (int k = d - 2; k >= 0; --k) {
    rows[static_cast<size_t>(k)] =
        numer[static_cast<size_t>(k) + 1] +
        rows[static_cast<size_t>(k) + 1].shifted_up(1);
  }
  Poly<C> remainder =
      numer[0] + rows[0].shifted_up(1);
  if (!(remainder == Poly<C>())) {
    throw Error("bezout division left a remainder");
  }
  SymMatrix<C> m = SymMatrix<C>::zero(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          rows[static_cast<size_t>(i)].coeff(j);
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (!(m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            m.entries[static_cast<size_t>(j)][static_cast<size_t>(i)])) {
        throw Error("bezout matrix is not symmetric");
      }
    }
  }
  return m;
}

// Outcome of a positivity sweep in the u = q - 1 basis.
struct PositivityCertificate {
  bool certified = false;
  std::string level;  // "full" or "principal+sampled"
  int dimension = 0;
  long minors_checked = 0;
  // Populated on failure: the first violating minor in (size, rows, cols)
  // order and its u-expansion (or evaluated value for sampled checks).
  std::vector<int> witness_rows;
  std::vector<int> witness_cols;
  std::string witness;
};

// Re-expands every entry in u = q - 1 and checks that every minor (all
// equal-size row/column subsets) has strictly positive integer
// coefficients; a sufficient certificate for total positivity at every
// real q >= 1.  Dimension capped at 10 (TooLarge beyond).
PositivityCertificate all_minors_positive_in_u(const SymMatrix<QPoly>& m,
                                               int threads = 0);

// Fallback certificate for dimensions beyond the full-sweep cap: all
// leading principal minors symbolically positive in u, plus a fixed-seed
// sample of general minors evaluated at integer points q = 1..5.
PositivityCertificate principal_and_sampled_certificate(
    const SymMatrix<QPoly>& m, int sample_count = 200, unsigned seed = 12345);

// Evaluates entries at q0 and tests positive definiteness via leading
// principal minors (exact integer arithmetic).
bool is_positive_definite_at(const SymMatrix<QPoly>& m, const Int& q0);

// Exact determinant (fraction-free elimination; 1 for the empty matrix).
QPoly sym_matrix_det(const SymMatrix<QPoly>& m);

struct SturmResult {
  bool real_rooted = false;
  int distinct_real_roots = 0;
  int squarefree_degree = 0;
};

// Sturm chain on the squarefree part: counts distinct real roots;
// real-rooted iff that count equals the squarefree degree.
SturmResult sturm_real_rooted(const RatPoly& f);

// Krein-Naimark criterion: true iff bezout_matrix(f, g) is positive
// definite, i.e. g strictly interlaces f.
bool interlaces(const Poly<Int>& f, const Poly<Int>& g);

}  // namespace dkl

#endif  // DKL_ROOTCHECK_HPP_
