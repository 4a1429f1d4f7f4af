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

#include "dkl/verify.hpp"

#include <sstream>

#include "dkl/errors.hpp"
#include "dkl/genfun.hpp"
#include "dkl/group.hpp"
#include "dkl/klengine.hpp"
#include "dkl/matroid.hpp"
#include "dkl/qsp.hpp"

namespace dkl {

namespace {

// Rank histogram of a matroid family as a polynomial in y.
QPoly rank_histogram(const std::vector<LabeledMatroid>& family) {
  QPoly h;
  for (const auto& m : family) h += QPoly::monomial(m.rank(), Int(1));
  return h;
}

void check_row(const std::string& label, const QPoly& got, const QPoly& want,
               std::vector<std::string>* lines) {
  std::ostringstream os;
  os << label << ": " << qpoly_to_string(got, "y");
  if (got != want) {
    os << " != " << qpoly_to_string(want, "y");
    throw Mismatch(os.str());
  }
  os << " [ok]";
  lines->push_back(os.str());
}

}  // namespace

std::vector<std::string> verify_genfun_bridge(int max_n,
                                              const std::vector<int>& qs) {
  if (max_n < 1 || max_n > kDefaultEnumCap)
    throw UsageError("genfun bridge needs 1 <= max_n <= enumeration cap");
  std::vector<std::string> lines;
  BiSeries c = series_C(max_n);
  BiSeries a = series_A(max_n);
  BiSeries s = series_S(max_n);
  for (int n = 1; n <= max_n; ++n) {
    check_row("C n=" + std::to_string(n), series_count_row(c, n),
              rank_histogram(connected_sp(n)), &lines);
    check_row("A n=" + std::to_string(n), series_count_row(a, n),
              rank_histogram(qsp_all(n)), &lines);
    check_row("S n=" + std::to_string(n), series_count_row(s, n),
              rank_histogram(qsp_simple(n)), &lines);
  }
  for (int q : qs) {
    BiSeries ag = series_AG(max_n, q);
    BiSeries sg = series_SG(max_n, q);
    for (int n = 1; n <= max_n; ++n) {
      WeightedCountTable table = weighted_counts(n);
      QPoly want_all, want_simple;
      for (int r = 0; r <= n; ++r) {
        want_all += QPoly::monomial(r, qpoly_eval(table.count_all[r], Int(q)));
        want_simple +=
            QPoly::monomial(r, qpoly_eval(table.count_simple[r], Int(q)));
      }
      std::string tag = " q=" + std::to_string(q) + " n=" + std::to_string(n);
      check_row("AG" + tag, series_count_row(ag, n), want_all, &lines);
      check_row("SG" + tag, series_count_row(sg, n), want_simple, &lines);
    }
  }
  return lines;
}

std::vector<std::string> verify_labeling_counts(
    int max_n, const std::vector<int>& orders) {
  std::vector<std::string> lines;
  for (int order : orders) {
    FiniteGroup g = make_cyclic(order);
    for (int n = 1; n <= max_n; ++n) {
      Int expect_total = 0, got_total = 0;
      for (const auto& m : all_matroids(n)) {
        Int want;
        mpz_ui_pow_ui(want.get_mpz_t(), order, n - m.component_count());
        Int got = Int(g_labelings(m, g).size());
        if (got != want) {
          throw Mismatch("labelings n=" + std::to_string(n) + " |G|=" +
                         std::to_string(order) + " " + m.to_string() + ": " +
                         got.get_str() + " != " + want.get_str());
        }
        expect_total += want;
        got_total += got;
      }
      lines.push_back("labelings n=" + std::to_string(n) + " |G|=" +
                      std::to_string(order) + ": total " +
                      got_total.get_str() + " [ok]");
    }
  }
  // Fixed graphic example: four vertices, a quadrilateral plus one chord.
  LabeledMatroid fig = graphic_matroid(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1},
                                           {2, 4}});
  size_t fig_classes = g_labelings(fig, make_cyclic(2)).size();
  if (fig_classes != 16)
    throw Mismatch("graphic example labeling classes: " +
                   std::to_string(fig_classes) + " != 16");
  lines.push_back("labelings graphic example |G|=2: 16 [ok]");
  return lines;
}

Int leading_count_formula(int m) {
  if (m < 2) throw UsageError("leading count formula needs m >= 2");
  Int dfac = 1;
  for (int k = 2 * m - 3; k >= 2; k -= 2) dfac *= k;
  Int pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), 2 * m - 1, m - 2);
  return dfac * pw;
}

std::vector<std::string> verify_leading_coefficients(int max_m_enum,
                                                     int max_m_symbolic) {
  std::vector<std::string> lines;
  for (int m = 2; m <= max_m_enum; ++m) {
    Int count = 0;
    for (const auto& mat : connected_sp(2 * m - 1))
      if (mat.is_simple() && mat.rank() == m) count += 1;
    Int want = leading_count_formula(m);
    if (count != want)
      throw Mismatch("leading enumeration m=" + std::to_string(m) + ": " +
                     count.get_str() + " != " + want.get_str());
    lines.push_back("leading enumeration m=" + std::to_string(m) + ": " +
                    count.get_str() + " [ok]");
  }
  for (int m = 2; m <= max_m_symbolic; ++m) {
    int n = 2 * m - 1;
    PZResult pz = dowling_pz(n);
    QPoly top = pz.p.coeff(m - 1);
    QPoly want = QPoly::monomial(2 * m - 2, leading_count_formula(m));
    if (top != want)
      throw Mismatch("leading coefficient m=" + std::to_string(m) + ": " +
                     qpoly_to_string(top) + " != " + qpoly_to_string(want));
    lines.push_back("leading coefficient m=" + std::to_string(m) + ": " +
                    qpoly_to_string(top) + " [ok]");
  }
  return lines;
}

}  // namespace dkl
