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

#include "dkl/genfun.hpp"

#include <algorithm>

namespace dkl {

namespace {

RatPoly rat_const(const Rat& c) { return RatPoly::constant(c); }

bool is_zero(const RatPoly& p) { return !p.degree().has_value(); }

// True when p is a constant equal to c.
bool is_const(const RatPoly& p, const Rat& c) {
  return p == RatPoly::constant(c);
}

void check_order(int order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
}

}  // namespace

BiSeries::BiSeries(int order) : order_(order) {
  check_order(order);
  coeffs_.resize(static_cast<size_t>(order) + 1);
}

BiSeries BiSeries::constant(int order, const Rat& c) {
  BiSeries s(order);
  s.coeffs_[0] = rat_const(c);
  return s;
}

BiSeries BiSeries::x_var(int order) {
  BiSeries s(order);
  if (order >= 1) s.coeffs_[1] = rat_const(1);
  return s;
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
  BiSeries out = *this;
  out += o;
  return out;
}

BiSeries BiSeries::operator-(const BiSeries& o) const {
  BiSeries out = *this;
  out -= o;
  return out;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  if (o.order_ != order_) throw UsageError("series order mismatch");
  for (int i = 0; i <= order_; ++i) {
    coeffs_[static_cast<size_t>(i)] += o.coeffs_[static_cast<size_t>(i)];
  }
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  if (o.order_ != order_) throw UsageError("series order mismatch");
  for (int i = 0; i <= order_; ++i) {
    coeffs_[static_cast<size_t>(i)] -= o.coeffs_[static_cast<size_t>(i)];
  }
  return *this;
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
  if (o.order_ != order_) throw UsageError("series order mismatch");
  BiSeries out(order_);
  for (int i = 0; i <= order_; ++i) {
    if (is_zero(coeffs_[static_cast<size_t>(i)])) continue;
    for (int j = 0; i + j <= order_; ++j) {
      if (is_zero(o.coeffs_[static_cast<size_t>(j)])) continue;
      out.coeffs_[static_cast<size_t>(i + j)] +=
          coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
    }
  }
  return out;
}

bool BiSeries::operator==(const BiSeries& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

BiSeries scale_x(const BiSeries& a, const Rat& c) {
  BiSeries out(a.order());
  Rat power(1);
  for (int i = 0; i <= a.order(); ++i) {
    out.set(i, a.at(i) * rat_const(power));
    power *= c;
  }
  return out;
}

BiSeries mul_y(const BiSeries& a) {
  BiSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) out.set(i, a.at(i).shifted_up(1));
  return out;
}

BiSeries derivative_x(const BiSeries& a) {
  BiSeries out(a.order());
  for (int i = 1; i <= a.order(); ++i) {
    out.set(i - 1, a.at(i) * rat_const(Rat(i)));
  }
  return out;
}

BiSeries integrate_x(const BiSeries& a) {
  BiSeries out(a.order());
  for (int i = 0; i < a.order(); ++i) {
    out.set(i + 1, a.at(i) * rat_const(Rat(1, i + 1)));
  }
  return out;
}

BiSeries reciprocal(const BiSeries& a) {
  const RatPoly& c0 = a.at(0);
  if (is_zero(c0) || c0.degree() != std::optional<int>(0)) {
    throw BadConstantTerm("reciprocal needs a nonzero constant term");
  }
  Rat inv = 1 / c0.coeff(0);
  BiSeries out(a.order());
  out.set(0, rat_const(inv));
  for (int k = 1; k <= a.order(); ++k) {
    RatPoly acc;
    for (int j = 1; j <= k; ++j) {
      acc += a.at(j) * out.at(k - j);
    }
    out.set(k, acc * rat_const(-inv));
  }
  return out;
}

BiSeries exp_series(const BiSeries& a) {
  if (!is_zero(a.at(0))) {
    throw BadConstantTerm("exp needs zero constant term");
  }
  BiSeries out(a.order());
  out.set(0, rat_const(1));
  for (int k = 1; k <= a.order(); ++k) {
    RatPoly acc;
    for (int j = 1; j <= k; ++j) {
      acc += a.at(j) * out.at(k - j) * rat_const(Rat(j));
    }
    out.set(k, acc * rat_const(Rat(1, k)));
  }
  return out;
}

BiSeries log_series(const BiSeries& a) {
  if (!is_const(a.at(0), Rat(1))) {
    throw BadConstantTerm("log needs constant term one");
  }
  BiSeries out(a.order());
  for (int k = 1; k <= a.order(); ++k) {
    RatPoly acc = a.at(k);
    for (int j = 1; j < k; ++j) {
      acc -= out.at(j) * a.at(k - j) * rat_const(Rat(j, k));
    }
    out.set(k, acc);
  }
  return out;
}

BiSeries compose_x(const BiSeries& outer, const BiSeries& inner) {
  if (outer.order() != inner.order()) {
    throw UsageError("series order mismatch");
  }
  if (!is_zero(inner.at(0))) {
    throw BadConstantTerm("composition needs inner constant term zero");
  }
  int n = outer.order();
  BiSeries out(n);
  out.set(0, outer.at(n));
  for (int i = n - 1; i >= 0; --i) {
    out = out * inner;
    out.set(0, out.at(0) + outer.at(i));
  }
  return out;
}

BiSeries comp_inverse_x(const BiSeries& f) {
  int n = f.order();
  if (!is_zero(f.at(0))) {
    throw NotInvertible("compositional inverse needs zero constant term");
  }
  if (n < 1 || is_zero(f.at(1)) || f.at(1).degree() != std::optional<int>(0)) {
    throw NotInvertible("linear coefficient must be a nonzero constant");
  }
  Rat lin = f.at(1).coeff(0);
  BiSeries fprime = derivative_x(f);
  // Start from the exact order-1 inverse and double the trusted order.
  BiSeries g(n);
  g.set(1, rat_const(1 / lin));
  int trusted = 1;
  while (trusted < n) {
    trusted = std::min(2 * trusted, n);
    BiSeries err = compose_x(f, g) - BiSeries::x_var(n);
    g -= err * reciprocal(compose_x(fprime, g));
    // Coefficients beyond the trusted order are garbage until the last
    // round; clearing them keeps the iteration transparent.
    for (int i = trusted + 1; i <= n; ++i) g.set(i, RatPoly());
  }
  return g;
}

BiSeries nth_root(const BiSeries& a, int r) {
  if (r < 1) throw UsageError("root index must be positive");
  if (!is_const(a.at(0), Rat(1))) {
    throw BadConstantTerm("nth_root needs constant term one");
  }
  if (r == 1) return a;
  BiSeries logged = log_series(a);
  BiSeries scaled(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    scaled.set(i, logged.at(i) * rat_const(Rat(1, r)));
  }
  return exp_series(scaled);
}

QPoly series_count_row(const BiSeries& s, int n) {
  if (n < 0 || n > s.order()) throw UsageError("row outside series order");
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  const RatPoly& row = s.at(n);
  QPoly out;
  int deg = row.degree_or(-1);
  for (int k = 0; k <= deg; ++k) {
    Rat scaled = row.coeff(k) * Rat(fact);
    if (scaled.get_den() != 1) {
      throw NonIntegralCoefficient("coefficient at x^" + std::to_string(n) +
                                   " y^" + std::to_string(k) +
                                   " does not clear to an integer");
    }
    out += QPoly::monomial(k, scaled.get_num());
  }
  return out;
}

namespace {

void check_named_series(const BiSeries& s, const char* name) {
  for (int i = 0; i <= s.order(); ++i) {
    if (s.at(i).degree_or(-1) > i) {
      throw Error(std::string(name) +
                  ": y-degree exceeds x-degree at order " + std::to_string(i));
    }
  }
}

void check_cap(int order) {
  if (order < 1 || order > kMaxSeriesOrder) {
    throw CapExceeded("series order capped at " +
                      std::to_string(kMaxSeriesOrder));
  }
}

}  // namespace

BiSeries series_C(int order) {
  check_cap(order);
  // f = (1/y) log(1+xy) + log(1+x) - x, written directly coefficientwise:
  // the x^k coefficient is (-1)^{k+1}/k * (y^{k-1} + 1) for k >= 2.
  BiSeries f(order);
  for (int k = 1; k <= order; ++k) {
    Rat c = Rat((k % 2 == 1) ? 1 : -1, k);
    RatPoly term = RatPoly::monomial(k - 1, c) + rat_const(c);
    if (k == 1) term -= rat_const(1);
    f.set(k, term);
  }
  BiSeries g = comp_inverse_x(f);
  BiSeries c = mul_y(integrate_x(g));
  if (order >= 1) {
    c.set(1, c.at(1) + RatPoly::monomial(1, 1) + rat_const(1));
  }
  check_named_series(c, "series_C");
  return c;
}

BiSeries series_A(int order) {
  check_cap(order);
  BiSeries a = exp_series(series_C(order));
  check_named_series(a, "series_A");
  return a;
}

BiSeries series_S(int order) {
  check_cap(order);
  BiSeries a = series_A(order);
  BiSeries log1p(order);
  BiSeries one_plus_x = BiSeries::constant(order, 1) + BiSeries::x_var(order);
  for (int k = 1; k <= order; ++k) {
    log1p.set(k, rat_const(Rat((k % 2 == 1) ? 1 : -1, k)));
  }
  BiSeries s = reciprocal(one_plus_x) * compose_x(a, log1p);
  check_named_series(s, "series_S");
  return s;
}

namespace {

BiSeries weighted_series(const BiSeries& base, int q, const char* name) {
  if (q < 1) throw UsageError("group order must be positive");
  BiSeries out = nth_root(scale_x(base, Rat(q)), q);
  check_named_series(out, name);
  // The alarm check: every exposed n!-scaled coefficient clears to
  // integers (these rows are counts of labeled objects).
  for (int n = 0; n <= out.order(); ++n) series_count_row(out, n);
  return out;
}

}  // namespace

BiSeries series_AG(int order, int q) {
  check_cap(order);
  return weighted_series(series_A(order), q, "series_AG");
}

BiSeries series_SG(int order, int q) {
  check_cap(order);
  return weighted_series(series_S(order), q, "series_SG");
}

}  // namespace dkl
