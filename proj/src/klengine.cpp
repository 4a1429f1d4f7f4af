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

#include "dkl/klengine.hpp"

#include <algorithm>
#include <sstream>

#include "dkl/parallel.hpp"
#include "dkl/qsp.hpp"

namespace dkl {

GradedLattice lattice_from_dowling(const DowlingLattice& dl) {
  GradedLattice lat;
  size_t size = static_cast<size_t>(dl.size());
  lat.ranks.resize(size);
  lat.above.resize(size);
  lat.bottom = dl.bottom();
  lat.top = dl.top();
  for (size_t i = 0; i < size; ++i) {
    lat.ranks[i] = dl.rank_of(static_cast<int>(i));
  }
  parallel_for(size, [&](size_t i) {
    lat.above[i] = dl.strictly_above(static_cast<int>(i));
  });
  return lat;
}

namespace {

void validate_lattice(const GradedLattice& lat, size_t max_flats) {
  size_t size = lat.ranks.size();
  if (size == 0 || lat.above.size() != size) {
    throw NotGraded("empty lattice or mismatched adjacency size");
  }
  if (size > max_flats) {
    throw TooLarge("lattice has " + std::to_string(size) + " flats, cap " +
                   std::to_string(max_flats));
  }
  if (lat.bottom < 0 || static_cast<size_t>(lat.bottom) >= size ||
      lat.top < 0 || static_cast<size_t>(lat.top) >= size) {
    throw NotGraded("bottom or top index out of range");
  }
  int r = lat.ranks[static_cast<size_t>(lat.top)];
  if (lat.ranks[static_cast<size_t>(lat.bottom)] != 0) {
    throw NotGraded("bottom flat must have rank 0");
  }
  for (size_t i = 0; i < size; ++i) {
    int ri = lat.ranks[i];
    if (ri < 0 || ri > r) throw NotGraded("rank out of range");
    if (ri == 0 && static_cast<int>(i) != lat.bottom) {
      throw NotGraded("rank 0 flat other than the bottom");
    }
    if (ri == r && static_cast<int>(i) != lat.top) {
      throw NotGraded("maximal-rank flat other than the top");
    }
    bool saw_top = false;
    for (int j : lat.above[i]) {
      if (j < 0 || static_cast<size_t>(j) >= size) {
        throw NotGraded("adjacency index out of range");
      }
      if (lat.ranks[static_cast<size_t>(j)] <= ri) {
        throw NotGraded("strictly-above list violates the rank function");
      }
      if (j == lat.top) saw_top = true;
    }
    if (static_cast<int>(i) == lat.top) {
      if (!lat.above[i].empty()) throw NotGraded("top flat has upper flats");
    } else if (!saw_top) {
      throw NotGraded("upper set misses the top flat");
    }
  }
}

}  // namespace

PZResult pz_from_lattice(const GradedLattice& lat,
                         const std::string& provenance, size_t max_flats) {
  validate_lattice(lat, max_flats);
  size_t size = lat.ranks.size();
  int r = lat.ranks[static_cast<size_t>(lat.top)];
  std::vector<std::vector<size_t>> by_rank(static_cast<size_t>(r) + 1);
  for (size_t i = 0; i < size; ++i) {
    by_rank[static_cast<size_t>(lat.ranks[i])].push_back(i);
  }
  std::vector<TQPoly> p(size);
  TQPoly known_bottom;
  for (int level = r; level >= 0; --level) {
    const auto& flats = by_rank[static_cast<size_t>(level)];
    parallel_for(flats.size(), [&](size_t fi) {
      size_t i = flats[fi];
      int d = r - level;
      if (d == 0) {
        p[i] = TQPoly::constant(qpoly_const(1));
        return;
      }
      TQPoly known;
      for (int j : lat.above[i]) {
        known += p[static_cast<size_t>(j)].shifted_up(
            lat.ranks[static_cast<size_t>(j)] - level);
      }
      p[i] = palindromic_complete(known, d);
      if (static_cast<int>(i) == lat.bottom) known_bottom = known;
    });
  }
  PZResult out;
  out.n = r;
  out.p = p[static_cast<size_t>(lat.bottom)];
  out.z = out.p + known_bottom;
  out.provenance = provenance;
  return out;
}

PZResult dowling_pz(int n) {
  if (n < 1 || n > 40) {
    throw CapExceeded("symbolic recursion capped at n = 40");
  }
  std::vector<TQPoly> p(static_cast<size_t>(n) + 1);
  p[0] = TQPoly::constant(qpoly_const(1));
  TQPoly known;
  for (int m = 1; m <= n; ++m) {
    std::vector<QPoly> w = whitney_row(m);
    known = TQPoly();
    for (int k = 0; k < m; ++k) {
      known += (p[static_cast<size_t>(k)] *
                TQPoly::constant(w[static_cast<size_t>(k)]))
                   .shifted_up(m - k);
    }
    p[static_cast<size_t>(m)] = palindromic_complete(known, m);
  }
  PZResult out;
  out.n = n;
  out.p = p[static_cast<size_t>(n)];
  out.z = out.p + known;
  out.provenance = "symbolic";
  return out;
}

namespace {

std::string coeff_line(const std::string& side, int n, int i,
                       const QPoly& from_pz, const QPoly& from_counts) {
  std::ostringstream os;
  os << side << " n=" << n << " t^" << i << ": engine "
     << qpoly_to_string(from_pz) << " vs counts "
     << qpoly_to_string(from_counts);
  return os.str();
}

}  // namespace

std::vector<std::string> verify_theorem1(int n) {
  PZResult pz = dowling_pz(n);
  WeightedCountTable counts = weighted_counts(n);
  std::vector<std::string> report;
  for (int i = 0; i <= n; ++i) {
    size_t rank = static_cast<size_t>(n - i);
    QPoly simple = counts.count_simple[rank];
    QPoly all = counts.count_all[rank];
    std::string pline = coeff_line("P", n, i, pz.p.coeff(i), simple);
    if (!(pz.p.coeff(i) == simple)) throw Mismatch(pline);
    report.push_back(pline + " [ok]");
    std::string zline = coeff_line("Z", n, i, pz.z.coeff(i), all);
    if (!(pz.z.coeff(i) == all)) throw Mismatch(zline);
    report.push_back(zline + " [ok]");
  }
  return report;
}

std::vector<std::string> verify_group_independence(
    int n, const std::vector<FiniteGroup>& groups) {
  PZResult symbolic = dowling_pz(n);
  std::vector<std::string> report;
  for (const FiniteGroup& g : groups) {
    LatticeCaps caps;
    caps.max_n = n;
    caps.max_group_order = g.order();
    DowlingLattice dl(n, g, caps);
    PZResult concrete = pz_from_lattice(lattice_from_dowling(dl),
                                        "generic(" + g.name() + ")");
    TQPoly expected_p = tq_eval_at_q(symbolic.p, Int(g.order()));
    TQPoly expected_z = tq_eval_at_q(symbolic.z, Int(g.order()));
    std::ostringstream os;
    os << "n=" << n << " group " << g.name() << " (order " << g.order()
       << "): P " << tqpoly_to_string(concrete.p) << " vs symbolic "
       << tqpoly_to_string(expected_p);
    if (!(concrete.p == expected_p) || !(concrete.z == expected_z)) {
      throw Mismatch(os.str());
    }
    report.push_back(os.str() + " [ok]");
  }
  return report;
}

}  // namespace dkl
