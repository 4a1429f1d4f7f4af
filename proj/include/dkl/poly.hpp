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

#ifndef DKL_POLY_HPP_
#define DKL_POLY_HPP_

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace dkl {

// Dense univariate polynomial over a commutative ring C.  C must be
// default-constructible to its zero, copyable, and support +, -, * and ==.
// Invariants: coefficients ascending by exponent, no trailing zeros, the
// zero polynomial is the empty coefficient list.  The degree of zero is not
// an integer; degree() returns nullopt for it.
template <typename C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(C v) {
    Poly p;
    p.c_.push_back(std::move(v));
    p.trim();
    return p;
  }
  static Poly monomial(int k, C v) {
    assert(k >= 0);
    Poly p;
    if (!(v == C{})) {
      p.c_.assign(static_cast<size_t>(k) + 1, C{});
      p.c_.back() = std::move(v);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  // Degree with an explicit fallback for the zero polynomial; the fallback
  // never participates in arithmetic.
  int degree_or(int if_zero) const {
    return c_.empty() ? if_zero : static_cast<int>(c_.size()) - 1;
  }

  const std::vector<C>& coeffs() const { return c_; }
  // Coefficient of x^k, zero beyond the stored range.
  C coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return C{};
    return c_[static_cast<size_t>(k)];
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C{});
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C{});
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<C> r(c_.size(), C{});
    for (size_t i = 0; i < c_.size(); ++i) r[i] = C{} - c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C{});
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == C{}) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Multiply by x^k.
  Poly shifted_up(int k) const {
    assert(k >= 0);
    if (is_zero()) return Poly();
    std::vector<C> r(c_.size() + static_cast<size_t>(k), C{});
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Poly(std::move(r));
  }

  // Horner evaluation at a point of any ring V that C multiplies into.
  template <typename V>
  V eval(const V& x) const {
    V acc{};
    for (size_t i = c_.size(); i-- > 0;) {
      acc = acc * x + V(c_[i]);
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == C{}) c_.pop_back();
  }
  std::vector<C> c_;
};

}  // namespace dkl

#endif  // DKL_POLY_HPP_
