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

#ifndef DKL_GENFUN_HPP_
#define DKL_GENFUN_HPP_

#include <vector>

#include "dkl/qpoly.hpp"

namespace dkl {

// Truncated bivariate formal power series: for each x-power 0..order a
// dense polynomial in y over exact rationals.  All arithmetic is exact
// modulo x^{order+1}.
class BiSeries {
 public:
  explicit BiSeries(int order);

  int order() const { return order_; }
  const RatPoly& at(int i) const { return coeffs_[static_cast<size_t>(i)]; }
  void set(int i, RatPoly p) { coeffs_[static_cast<size_t>(i)] = std::move(p); }

  static BiSeries constant(int order, const Rat& c);
  static BiSeries x_var(int order);

  BiSeries operator+(const BiSeries& o) const;
  BiSeries operator-(const BiSeries& o) const;
  BiSeries operator*(const BiSeries& o) const;
  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  bool operator==(const BiSeries& o) const;

 private:
  int order_;
  std::vector<RatPoly> coeffs_;
};

// x -> c*x.
BiSeries scale_x(const BiSeries& a, const Rat& c);
// Multiplies by the monomial y.
BiSeries mul_y(const BiSeries& a);
// d/dx.
BiSeries derivative_x(const BiSeries& a);
// Antiderivative in x with zero constant term; the x^order coefficient of
// the integrand falls beyond the order and is dropped.
BiSeries integrate_x(const BiSeries& a);

// 1/a; the constant term of a must be a nonzero rational constant
// (y-degree 0), otherwise BadConstantTerm.
BiSeries reciprocal(const BiSeries& a);

// exp via the formal-ODE recurrence f' = a'f; requires a(0,y) = 0.
BiSeries exp_series(const BiSeries& a);
// log via a g' = a'; requires a(0,y) = 1.
BiSeries log_series(const BiSeries& a);

// outer(inner); requires inner(0,y) = 0.
BiSeries compose_x(const BiSeries& outer, const BiSeries& inner);

// Compositional inverse in x by order-doubling Newton iteration
// g <- g - (f(g) - x)/f'(g); requires f(0,y) = 0 and the x coefficient a
// nonzero rational constant, otherwise NotInvertible.
BiSeries comp_inverse_x(const BiSeries& f);

// exp(log(a)/r); requires a(0,y) = 1 and r >= 1.
BiSeries nth_root(const BiSeries& a, int r);

inline constexpr int kMaxSeriesOrder = 20;

// Series count rows: the n-th x-coefficient times n!, which must clear to
// a polynomial in y with integer coefficients; NonIntegralCoefficient
// otherwise.
QPoly series_count_row(const BiSeries& s, int n);

// Bivariate generating function of connected series-parallel matroids by
// size (x) and rank (y): x(y+1) plus y times the integral of the
// compositional inverse of (1/y)log(1+xy) + log(1+x) - x.
BiSeries series_C(int order);
// All quasi-series-parallel matroids: exp of series_C.
BiSeries series_A(int order);
// Simple ones: (1/(1+x)) * A(log(1+x), y); counts the empty matroid, so
// the constant term is 1.
BiSeries series_S(int order);
// Group-weighted versions at concrete group order q: A(qx,y)^{1/q} and
// S(qx,y)^{1/q}.  Every n!-scaled coefficient is checked integral.
BiSeries series_AG(int order, int q);
BiSeries series_SG(int order, int q);

}  // namespace dkl

#endif  // DKL_GENFUN_HPP_
