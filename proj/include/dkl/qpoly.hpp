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

#ifndef DKL_QPOLY_HPP_
#define DKL_QPOLY_HPP_

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "dkl/errors.hpp"
#include "dkl/poly.hpp"

namespace dkl {

using Int = mpz_class;
using Rat = mpq_class;

// Polynomial in the group order q over arbitrary-precision integers.
using QPoly = Poly<Int>;
// Polynomial in t whose coefficients are QPoly; also reused for plain
// integer polynomials in t (constant QPoly coefficients).
using TQPoly = Poly<QPoly>;
// Polynomial over exact rationals (root certificates, interpolation).
using RatPoly = Poly<Rat>;

QPoly qpoly_from(const std::vector<long>& coeffs);
QPoly qpoly_const(long v);
QPoly qpoly_monomial(int k, long v = 1);

Int qpoly_eval(const QPoly& p, const Int& q0);

// Substitutes q = u + 1, i.e. re-expands p around q = 1.  The returned
// coefficient list is in powers of u = q - 1.
QPoly qpoly_shift_to_u(const QPoly& p);
// Inverse substitution u = q - 1.
QPoly qpoly_shift_from_u(const QPoly& p);

// Exact quotient in Z[q]; throws NotDivisible when the division leaves a
// remainder or a non-integer coefficient.
QPoly qpoly_div_exact(const QPoly& a, const QPoly& b);

// Content (gcd of coefficients, positive) of a nonzero polynomial.
Int qpoly_content(const QPoly& p);

// Recovers the unique integer polynomial of degree <= degree_bound through
// the samples (q_i, value_i).  Needs degree_bound + 1 distinct sample
// points; extra samples are consistency-checked.  Throws
// InconsistentSamples when no such polynomial matches every sample and
// NonIntegerCoefficients when the interpolant is not integral.
QPoly qpoly_interpolate(const std::vector<std::pair<Int, Int>>& samples,
                        int degree_bound);

// Completes known = sum of the strictly-upper part so that Z = P + known is
// palindromic of degree exactly d, with deg P < d/2 and P(0) = 1.  Requires
// known(0) coefficient zero and t^d coefficient one.
TQPoly palindromic_complete(const TQPoly& known, int d);

// True when p has degree exactly d and coefficient symmetry c_i = c_{d-i}.
bool tq_is_palindromic(const TQPoly& p, int d);

// Substitutes t -> t / q^2 and clears denominators, i.e. divides the t^i
// coefficient by q^{2i}.  Throws NotDivisible when any coefficient is not
// divisible by the required power of q.
TQPoly scale_t_by_qsquared(const TQPoly& p);

// Evaluates every q-coefficient at q = q0, returning a polynomial in t
// with integer (constant QPoly) coefficients.
TQPoly tq_eval_at_q(const TQPoly& p, const Int& q0);

// Plain-text renderers ("q^2 + 5 q + 10" style, descending powers).
std::string qpoly_to_string(const QPoly& p, const std::string& var = "q");
std::string tqpoly_to_string(const TQPoly& p);

// Factored rendering: per power of t the integer content is pulled out
// and a multi-term cofactor is parenthesized, e.g.
// "25 (3 q + 4) t^2 + (q^3 + 6 q^2 + 15 q + 20) t + 1".
std::string tqpoly_to_factored_string(const TQPoly& p);

}  // namespace dkl

#endif  // DKL_QPOLY_HPP_
