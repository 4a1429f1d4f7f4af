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

#include "dkl/qpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dkl {

QPoly qpoly_from(const std::vector<long>& coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  return QPoly(std::move(c));
}

QPoly qpoly_const(long v) { return QPoly::constant(Int(v)); }

QPoly qpoly_monomial(int k, long v) { return QPoly::monomial(k, Int(v)); }

Int qpoly_eval(const QPoly& p, const Int& q0) { return p.eval(q0); }

namespace {

// p(x + c) by Horner: fold coefficients from the top against (x + c).
QPoly taylor_shift(const QPoly& p, long c) {
  QPoly shift(std::vector<Int>{Int(c), Int(1)});
  QPoly acc;
  const auto& cs = p.coeffs();
  for (size_t i = cs.size(); i-- > 0;) {
    acc = acc * shift + QPoly::constant(cs[i]);
  }
  return acc;
}

}  // namespace

QPoly qpoly_shift_to_u(const QPoly& p) { return taylor_shift(p, 1); }

QPoly qpoly_shift_from_u(const QPoly& p) { return taylor_shift(p, -1); }

QPoly qpoly_div_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by zero polynomial");
  if (a.is_zero()) return QPoly();
  int da = *a.degree(), db = *b.degree();
  if (da < db) throw NotDivisible("degree of dividend below divisor");
  std::vector<Int> rem = a.coeffs();
  const auto& d = b.coeffs();
  std::vector<Int> quo(static_cast<size_t>(da - db) + 1, Int(0));
  for (int k = da - db; k >= 0; --k) {
    Int top = rem[static_cast<size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) {
      throw NotDivisible("non-integral quotient coefficient");
    }
    Int qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
    quo[static_cast<size_t>(k)] = qk;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<size_t>(k + j)] -= qk * d[static_cast<size_t>(j)];
    }
  }
  for (const Int& r : rem) {
    if (r != 0) throw NotDivisible("nonzero remainder");
  }
  return QPoly(std::move(quo));
}

Int qpoly_content(const QPoly& p) {
  Int g = 0;
  for (const Int& c : p.coeffs()) {
    Int a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

QPoly qpoly_interpolate(const std::vector<std::pair<Int, Int>>& samples,
                        int degree_bound) {
  if (degree_bound < 0) throw UsageError("negative degree bound");
  std::set<Int> points;
  for (const auto& s : samples) points.insert(s.first);
  if (static_cast<int>(points.size()) < degree_bound + 1) {
    throw UsageError("need degree_bound + 1 distinct sample points");
  }
  // Newton divided differences on the first degree_bound + 1 distinct
  // points, exact over Q.
  std::vector<std::pair<Int, Int>> base;
  std::set<Int> used;
  for (const auto& s : samples) {
    if (static_cast<int>(base.size()) == degree_bound + 1) break;
    if (used.insert(s.first).second) base.push_back(s);
  }
  size_t m = base.size();
  std::vector<Rat> dd(m);
  for (size_t i = 0; i < m; ++i) dd[i] = Rat(base[i].second);
  std::vector<std::vector<Rat>> table(1, dd);
  for (size_t lvl = 1; lvl < m; ++lvl) {
    std::vector<Rat> next(m - lvl);
    for (size_t i = 0; i + lvl < m; ++i) {
      Rat num = table[lvl - 1][i + 1] - table[lvl - 1][i];
      Rat den = Rat(base[i + lvl].first - base[i].first);
      next[i] = num / den;
    }
    table.push_back(std::move(next));
  }
  // Expand the Newton form into monomial coefficients.
  RatPoly acc;
  RatPoly prod = RatPoly::constant(Rat(1));
  for (size_t lvl = 0; lvl < m; ++lvl) {
    acc += RatPoly::constant(table[lvl][0]) * prod;
    RatPoly lin(std::vector<Rat>{Rat(-base[lvl].first), Rat(1)});
    prod *= lin;
  }
  std::vector<Int> coeffs;
  for (const Rat& c : acc.coeffs()) {
    Rat cc = c;
    cc.canonicalize();
    if (cc.get_den() != 1) {
      throw NonIntegerCoefficients("interpolant has coefficient " +
                                   cc.get_str());
    }
    coeffs.push_back(cc.get_num());
  }
  QPoly result(std::move(coeffs));
  for (const auto& s : samples) {
    if (qpoly_eval(result, s.first) != s.second) {
      throw InconsistentSamples("sample at q = " + s.first.get_str() +
                                " not matched by the interpolant");
    }
  }
  return result;
}

bool tq_is_palindromic(const TQPoly& p, int d) {
  if (p.degree_or(-1) != d) return false;
  for (int i = 0; 2 * i <= d; ++i) {
    if (!(p.coeff(i) == p.coeff(d - i))) return false;
  }
  return true;
}

TQPoly palindromic_complete(const TQPoly& known, int d) {
  if (d < 1) throw NotCompletable("degree must be at least 1");
  if (known.degree_or(-1) > d) {
    throw NotCompletable("known part exceeds target degree");
  }
  if (!known.coeff(0).is_zero()) {
    throw NotCompletable("known part has nonzero constant term");
  }
  if (!(known.coeff(d) == QPoly::constant(Int(1)))) {
    throw NotCompletable("known part t^d coefficient is not 1");
  }
  std::vector<QPoly> p;
  for (int i = 0; 2 * i < d; ++i) {
    p.push_back(known.coeff(d - i) - known.coeff(i));
  }
  TQPoly result{std::move(p)};
  TQPoly z = result + known;
  if (!tq_is_palindromic(z, d)) {
    throw NotCompletable("completed sum is not palindromic of degree " +
                         std::to_string(d));
  }
  return result;
}

TQPoly scale_t_by_qsquared(const TQPoly& p) {
  std::vector<QPoly> out;
  const auto& cs = p.coeffs();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i == 0) {
      out.push_back(cs[i]);
      continue;
    }
    if (cs[i].is_zero()) {
      out.push_back(QPoly());
      continue;
    }
    QPoly div = QPoly::monomial(static_cast<int>(2 * i), Int(1));
    out.push_back(qpoly_div_exact(cs[i], div));
  }
  return TQPoly(std::move(out));
}

TQPoly tq_eval_at_q(const TQPoly& p, const Int& q0) {
  std::vector<QPoly> out;
  for (const QPoly& c : p.coeffs()) {
    out.push_back(QPoly::constant(qpoly_eval(c, q0)));
  }
  return TQPoly(std::move(out));
}

namespace {

void append_monomial(std::ostringstream& os, const Int& c, int k,
                     const std::string& var, bool first) {
  Int a = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (a != 1 || k == 0) {
    os << a.get_str();
    if (k > 0) os << " ";
  }
  if (k == 1) {
    os << var;
  } else if (k > 1) {
    os << var << "^" << k;
  }
}

}  // namespace

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = *p.degree(); k >= 0; --k) {
    Int c = p.coeff(k);
    if (c == 0) continue;
    append_monomial(os, c, k, var, first);
    first = false;
  }
  return os.str();
}

std::string tqpoly_to_string(const TQPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = *p.degree(); k >= 0; --k) {
    QPoly c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    bool scalar = c.degree_or(0) == 0;
    std::string cs = qpoly_to_string(c);
    if (k == 0) {
      os << (scalar ? cs : "(" + cs + ")");
    } else {
      if (!scalar) {
        os << "(" << cs << ") ";
      } else if (!(c == QPoly::constant(Int(1)))) {
        os << cs << " ";
      }
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::string tqpoly_to_factored_string(const TQPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::string> terms;
  for (int i = *p.degree(); i >= 0; --i) {
    QPoly c = p.coeff(i);
    if (c.is_zero()) continue;
    Int content = qpoly_content(c);
    QPoly inner = qpoly_div_exact(c, QPoly::constant(content));
    int inner_terms = 0;
    for (int j = 0; j <= inner.degree_or(0); ++j)
      if (inner.coeff(j) != 0) ++inner_terms;
    std::string cs;
    if (inner.degree_or(0) == 0) {
      if (!(content == 1 && i > 0)) cs = content.get_str();
    } else {
      std::string head = content == 1 ? "" : content.get_str() + " ";
      if (inner_terms == 1) {
        cs = head + qpoly_to_string(inner);
      } else {
        cs = head + "(" + qpoly_to_string(inner) + ")";
      }
    }
    std::string ts = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (cs.empty()) {
      terms.push_back(ts);
    } else if (ts.empty()) {
      terms.push_back(cs);
    } else {
      terms.push_back(cs + " " + ts);
    }
  }
  std::string out;
  for (size_t k = 0; k < terms.size(); ++k) {
    if (k) out += " + ";
    out += terms[k];
  }
  return out;
}

}  // namespace dkl
