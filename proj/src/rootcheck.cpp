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

#include "dkl/rootcheck.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "dkl/parallel.hpp"

namespace dkl {

namespace {

std::vector<int> bits_of(uint32_t mask) {
  std::vector<int> out;
  for (int b = 0; b < 32; ++b) {
    if (mask & (1u << b)) out.push_back(b);
  }
  return out;
}

bool all_coeffs_positive(const QPoly& p) {
  int deg = p.degree_or(-1);
  if (deg < 0) return false;  // the zero polynomial is not positive
  for (int i = 0; i <= deg; ++i) {
    if (p.coeff(i) <= 0) return false;
  }
  return true;
}

// Fraction-free elimination; returns the d leading principal minors.
// Falls back to expansion when a pivot vanishes (the certificate will
// fail on the zero minor anyway, but the remaining values stay exact).
QPoly det_by_expansion(const std::vector<std::vector<QPoly>>& a,
                       const std::vector<int>& rows,
                       const std::vector<int>& cols);

std::vector<QPoly> principal_minors(const SymMatrix<QPoly>& m) {
  int d = m.d;
  std::vector<std::vector<QPoly>> b = m.entries;
  std::vector<QPoly> out;
  QPoly prev = qpoly_const(1);
  for (int k = 0; k < d; ++k) {
    QPoly pivot = b[static_cast<size_t>(k)][static_cast<size_t>(k)];
    out.push_back(pivot);
    if (pivot == QPoly()) {
      std::vector<int> idx;
      for (int j = k; j < d; ++j) {
        idx.clear();
        for (int t = 0; t <= j; ++t) idx.push_back(t);
        if (j > k) out.push_back(det_by_expansion(m.entries, idx, idx));
      }
      return out;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        b[static_cast<size_t>(i)][static_cast<size_t>(j)] = qpoly_div_exact(
            b[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot -
                b[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                    b[static_cast<size_t>(k)][static_cast<size_t>(j)],
            prev);
      }
    }
    prev = pivot;
  }
  return out;
}

QPoly det_by_expansion(const std::vector<std::vector<QPoly>>& a,
                       const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  size_t k = rows.size();
  if (k == 0) return qpoly_const(1);
  if (k == 1) {
    return a[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[0])];
  }
  QPoly acc;
  std::vector<int> sub(rows.begin() + 1, rows.end());
  for (size_t t = 0; t < k; ++t) {
    const QPoly& e =
        a[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[t])];
    if (e == QPoly()) continue;
    std::vector<int> subc;
    for (size_t j = 0; j < k; ++j) {
      if (j != t) subc.push_back(cols[j]);
    }
    QPoly term = e * det_by_expansion(a, sub, subc);
    if (t % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

Int det_int(std::vector<std::vector<Int>> a) {
  int d = static_cast<int>(a.size());
  if (d == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < d; ++i) {
        if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
      sign = -sign;
    }
    const Int pivot = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        Int num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot -
                  a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                      a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)]
                         .get_mpz_t(),
                     num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  Int det = a[static_cast<size_t>(d - 1)][static_cast<size_t>(d - 1)];
  return sign > 0 ? det : Int(-det);
}

// Positive definiteness of an integer symmetric matrix by Sylvester's
// criterion; the Bareiss diagonal yields the principal minors.
bool int_matrix_pd(std::vector<std::vector<Int>> a) {
  int d = static_cast<int>(a.size());
  Int prev = 1;
  for (int k = 0; k < d; ++k) {
    const Int pivot = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    if (pivot <= 0) return false;
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        Int num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot -
                  a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                      a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)]
                         .get_mpz_t(),
                     num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  return true;
}

std::vector<std::vector<Int>> evaluate_matrix(const SymMatrix<QPoly>& m,
                                              const Int& q0) {
  std::vector<std::vector<Int>> a(static_cast<size_t>(m.d),
                                  std::vector<Int>(static_cast<size_t>(m.d)));
  for (int i = 0; i < m.d; ++i) {
    for (int j = 0; j < m.d; ++j) {
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = qpoly_eval(
          m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)], q0);
    }
  }
  return a;
}

}  // namespace

QPoly sym_matrix_det(const SymMatrix<QPoly>& m) {
  if (m.d == 0) return qpoly_const(1);
  return principal_minors(m).back();
}

PositivityCertificate all_minors_positive_in_u(const SymMatrix<QPoly>& m,
                                               int threads) {
  int d = m.d;
  if (d > 10) {
    throw TooLarge("full minor sweep capped at dimension 10");
  }
  PositivityCertificate cert;
  cert.level = "full";
  cert.dimension = d;
  if (d == 0) {
    cert.certified = true;  // empty matrix, vacuous
    return cert;
  }
  // Shift entries first; every minor of the shifted matrix is the
  // u-expansion of the corresponding minor of the original.
  std::vector<std::vector<QPoly>> u(
      static_cast<size_t>(d), std::vector<QPoly>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      u[static_cast<size_t>(i)][static_cast<size_t>(j)] = qpoly_shift_to_u(
          m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
  }
  uint32_t full = (d == 32) ? ~0u : ((1u << d) - 1);
  std::vector<std::vector<uint32_t>> by_size(static_cast<size_t>(d) + 1);
  for (uint32_t mask = 1; mask <= full; ++mask) {
    by_size[static_cast<size_t>(std::popcount(mask))].push_back(mask);
  }
  // rank_of[mask] = position of mask within its size class.
  std::vector<int> rank_of(static_cast<size_t>(full) + 1, 0);
  for (int k = 1; k <= d; ++k) {
    for (size_t i = 0; i < by_size[static_cast<size_t>(k)].size(); ++i) {
      rank_of[by_size[static_cast<size_t>(k)][i]] = static_cast<int>(i);
    }
  }
  std::vector<QPoly> prev_level;  // minors of size k-1, index r*S + c
  for (int k = 1; k <= d; ++k) {
    const auto& masks = by_size[static_cast<size_t>(k)];
    size_t s = masks.size();
    size_t s_prev = k >= 2 ? by_size[static_cast<size_t>(k) - 1].size() : 0;
    std::vector<QPoly> level(s * s);
    parallel_for(
        s * s,
        [&](size_t pair) {
          uint32_t rmask = masks[pair / s];
          uint32_t cmask = masks[pair % s];
          QPoly& out = level[pair];
          if (k == 1) {
            out = u[static_cast<size_t>(std::countr_zero(rmask))]
                   [static_cast<size_t>(std::countr_zero(cmask))];
            return;
          }
          int r0 = std::countr_zero(rmask);
          uint32_t rsub = rmask & (rmask - 1);
          size_t rrank = static_cast<size_t>(rank_of[rsub]);
          int t = 0;
          QPoly acc;
          for (int c : bits_of(cmask)) {
            const QPoly& e =
                u[static_cast<size_t>(r0)][static_cast<size_t>(c)];
            if (!(e == QPoly())) {
              uint32_t csub = cmask & ~(1u << c);
              const QPoly& sub =
                  prev_level[rrank * s_prev +
                             static_cast<size_t>(rank_of[csub])];
              if (t % 2 == 0) {
                acc += e * sub;
              } else {
                acc -= e * sub;
              }
            }
            ++t;
          }
          out = std::move(acc);
        },
        threads);
    cert.minors_checked += static_cast<long>(s * s);
    for (size_t pair = 0; pair < s * s; ++pair) {
      if (!all_coeffs_positive(level[pair])) {
        cert.certified = false;
        cert.witness_rows = bits_of(masks[pair / s]);
        cert.witness_cols = bits_of(masks[pair % s]);
        cert.witness = qpoly_to_string(level[pair], "u");
        return cert;
      }
    }
    prev_level = std::move(level);
  }
  cert.certified = true;
  return cert;
}

PositivityCertificate principal_and_sampled_certificate(
    const SymMatrix<QPoly>& m, int sample_count, unsigned seed) {
  PositivityCertificate cert;
  cert.level = "principal+sampled";
  cert.dimension = m.d;
  if (m.d == 0) {
    cert.certified = true;
    return cert;
  }
  std::vector<QPoly> principals = principal_minors(m);
  for (size_t k = 0; k < principals.size(); ++k) {
    ++cert.minors_checked;
    QPoly in_u = qpoly_shift_to_u(principals[k]);
    if (!all_coeffs_positive(in_u)) {
      cert.certified = false;
      for (int i = 0; i <= static_cast<int>(k); ++i) {
        cert.witness_rows.push_back(i);
        cert.witness_cols.push_back(i);
      }
      cert.witness = qpoly_to_string(in_u, "u");
      return cert;
    }
  }
  std::mt19937 rng(seed);
  // Hand-rolled Fisher-Yates so the sampled index sets do not depend on
  // the standard library's shuffle implementation.
  auto pick_subset = [&rng](int d, int k) {
    std::vector<int> idx(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i;
    for (int i = d - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<unsigned>(i + 1));
      std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
    }
    idx.resize(static_cast<size_t>(k));
    std::sort(idx.begin(), idx.end());
    return idx;
  };
  for (int s = 0; s < sample_count; ++s) {
    int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(m.d));
    std::vector<int> rows = pick_subset(m.d, k);
    std::vector<int> cols = pick_subset(m.d, k);
    ++cert.minors_checked;
    for (int q0 = 1; q0 <= 5; ++q0) {
      std::vector<std::vector<Int>> sub(
          static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k)));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          sub[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              qpoly_eval(m.entries[static_cast<size_t>(
                             rows[static_cast<size_t>(i)])][static_cast<size_t>(
                             cols[static_cast<size_t>(j)])],
                         Int(q0));
        }
      }
      Int det = det_int(std::move(sub));
      if (det <= 0) {
        cert.certified = false;
        cert.witness_rows = rows;
        cert.witness_cols = cols;
        std::ostringstream os;
        os << "q=" << q0 << " det=" << det.get_str();
        cert.witness = os.str();
        return cert;
      }
    }
  }
  cert.certified = true;
  return cert;
}

bool is_positive_definite_at(const SymMatrix<QPoly>& m, const Int& q0) {
  if (m.d == 0) return true;
  return int_matrix_pd(evaluate_matrix(m, q0));
}

namespace {

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly out;
  int deg = p.degree_or(-1);
  for (int i = 1; i <= deg; ++i) {
    out += RatPoly::monomial(i - 1, p.coeff(i) * Rat(i));
  }
  return out;
}

// Division with remainder over the rationals.
std::pair<RatPoly, RatPoly> rat_divmod(const RatPoly& a, const RatPoly& b) {
  int db = b.degree_or(-1);
  if (db < 0) throw UsageError("division by the zero polynomial");
  RatPoly quot;
  RatPoly rem = a;
  Rat lead = b.coeff(db);
  while (true) {
    int dr = rem.degree_or(-1);
    if (dr < db) break;
    Rat c = rem.coeff(dr) / lead;
    RatPoly term = RatPoly::monomial(dr - db, c);
    quot += term;
    rem -= term * b;
  }
  return {quot, rem};
}

RatPoly make_monic(const RatPoly& p) {
  int d = p.degree_or(-1);
  if (d < 0) return p;
  Rat inv = 1 / p.coeff(d);
  RatPoly out;
  for (int i = 0; i <= d; ++i) out += RatPoly::monomial(i, p.coeff(i) * inv);
  return out;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (b.degree_or(-1) >= 0) {
    RatPoly r = rat_divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

int sign_of(const Rat& r) {
  int s = sgn(r);
  return s;
}

int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmResult sturm_real_rooted(const RatPoly& f) {
  if (f.degree_or(-1) < 0) throw UsageError("sturm needs a nonzero polynomial");
  SturmResult out;
  RatPoly fp = rat_derivative(f);
  RatPoly squarefree =
      fp.degree_or(-1) < 0 ? make_monic(f)
                           : rat_divmod(f, rat_gcd(f, fp)).first;
  out.squarefree_degree = squarefree.degree_or(0);
  if (out.squarefree_degree == 0) {
    out.distinct_real_roots = 0;
    out.real_rooted = true;
    return out;
  }
  std::vector<RatPoly> chain{squarefree, rat_derivative(squarefree)};
  while (chain.back().degree_or(-1) >= 1) {
    RatPoly rem = rat_divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.degree_or(-1) < 0) break;  // squarefree input: only at the end
    chain.push_back(-rem);
  }
  std::vector<int> at_pos, at_neg;
  for (const RatPoly& p : chain) {
    int d = p.degree_or(-1);
    if (d < 0) continue;
    int lead = sign_of(p.coeff(d));
    at_pos.push_back(lead);
    at_neg.push_back(d % 2 == 0 ? lead : -lead);
  }
  out.distinct_real_roots =
      count_sign_changes(at_neg) - count_sign_changes(at_pos);
  out.real_rooted = out.distinct_real_roots == out.squarefree_degree;
  return out;
}

bool interlaces(const Poly<Int>& f, const Poly<Int>& g) {
  SymMatrix<Int> b = bezout_matrix(f, g);
  return int_matrix_pd(b.entries);
}

}  // namespace dkl
