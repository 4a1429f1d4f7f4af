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

// Command line front end.  Exit codes: 0 success, 1 internal error,
// 2 usage or cap violation, 3 verification or certification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dkl/dowling.hpp"
#include "dkl/errors.hpp"
#include "dkl/genfun.hpp"
#include "dkl/group.hpp"
#include "dkl/json_io.hpp"
#include "dkl/klengine.hpp"
#include "dkl/qpoly.hpp"
#include "dkl/qsp.hpp"
#include "dkl/rootcheck.hpp"
#include "dkl/verify.hpp"

namespace {

using namespace dkl;

std::ofstream g_out_file;

std::ostream& open_out(const std::string& path) {
  if (path.empty()) return std::cout;
  g_out_file.open(path);
  if (!g_out_file) throw UsageError("cannot open output file: " + path);
  return g_out_file;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw UsageError("bad integer list entry: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

void tq_csv_rows(std::ostream& os, const TQPoly& p, const std::string& prefix) {
  for (int i = 0; i <= p.degree_or(0); ++i) {
    QPoly c = p.coeff(i);
    for (int j = 0; j <= c.degree_or(0); ++j) {
      if (c.coeff(j) == 0) continue;
      os << prefix << i << "," << j << "," << c.coeff(j).get_str() << "\n";
    }
  }
}

struct PairSpec {
  char letter = 'P';
  int hi = 0;
  int lo = 0;
};

PairSpec parse_pair(const std::string& s) {
  PairSpec ps;
  std::stringstream ss(s);
  std::string a, b;
  if (!std::getline(ss, a, ',') || !std::getline(ss, b) || a.size() < 2 ||
      b.size() < 2)
    throw UsageError("pair must look like P6,P5 or Z7,Z6");
  if (a[0] != b[0] || (a[0] != 'P' && a[0] != 'Z'))
    throw UsageError("pair members must share a letter P or Z");
  ps.letter = a[0];
  try {
    ps.hi = std::stoi(a.substr(1));
    ps.lo = std::stoi(b.substr(1));
  } catch (const std::exception&) {
    throw UsageError("pair must look like P6,P5 or Z7,Z6");
  }
  if (ps.hi < 1 || ps.lo < 1) throw UsageError("pair indices must be >= 1");
  return ps;
}

TQPoly tq_at_q(const TQPoly& p, int q) { return tq_eval_at_q(p, Int(q)); }

RatPoly tq_to_ratpoly(const TQPoly& p) {
  // Only valid once every coefficient is a constant.
  RatPoly out;
  for (int i = 0; i <= p.degree_or(0); ++i) {
    QPoly c = p.coeff(i);
    if (c.degree_or(0) > 0)
      throw UsageError("polynomial still has symbolic coefficients");
    out += RatPoly::monomial(i, Rat(c.coeff(0)));
  }
  return out;
}

Poly<Int> tq_to_intpoly(const TQPoly& p) {
  Poly<Int> out;
  for (int i = 0; i <= p.degree_or(0); ++i) {
    QPoly c = p.coeff(i);
    if (c.degree_or(0) > 0)
      throw UsageError("polynomial still has symbolic coefficients");
    out += Poly<Int>::monomial(i, c.coeff(0));
  }
  return out;
}

// ---- pz ----

struct PzOpts {
  int n = 1;
  bool symbolic = false;
  std::string group;
  bool scaled = false;
  std::string format = "text";
  std::string out;
  long max_flats = 200000;
};

int run_pz(const PzOpts& o) {
  if (o.symbolic == !o.group.empty())
    throw UsageError("choose exactly one of --symbolic or --group");
  if (o.scaled && !o.symbolic)
    throw UsageError("--scaled requires --symbolic");
  PZResult r;
  std::optional<int> qval;
  if (o.symbolic) {
    r = dowling_pz(o.n);
  } else {
    FiniteGroup g = group_from_spec(o.group);
    LatticeCaps caps;
    caps.max_n = o.n;
    caps.max_group_order = g.order();
    caps.max_flats = o.max_flats;
    DowlingLattice dl(o.n, g, caps);
    r = pz_from_lattice(lattice_from_dowling(dl), "generic(" + o.group + ")",
                        o.max_flats);
    qval = g.order();
  }
  TQPoly pshow = o.scaled ? scale_t_by_qsquared(r.p) : r.p;
  std::ostream& os = open_out(o.out);
  if (o.format == "text") {
    os << "P = " << tqpoly_to_string(pshow) << "\n";
    os << "Z = " << tqpoly_to_string(r.z) << "\n";
  } else if (o.format == "latex") {
    os << tqpoly_to_factored_string(pshow) << "\n";
  } else if (o.format == "json") {
    PZResult shown = r;
    shown.p = pshow;
    os << pz_to_json(shown, qval).dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "poly,t_power,q_power,coeff\n";
    tq_csv_rows(os, pshow, "P,");
    tq_csv_rows(os, r.z, "Z,");
  } else {
    throw UsageError("unknown format: " + o.format);
  }
  return 0;
}

// ---- table ----

struct TableOpts {
  int max_n = 8;
  bool scaled = false;
  bool symbolic = true;
  std::string format = "latex";
  std::string out;
};

int run_table(const TableOpts& o) {
  std::ostream& os = open_out(o.out);
  if (o.format == "csv") os << "n,t_power,q_power,coeff\n";
  for (int n = 1; n <= o.max_n; ++n) {
    PZResult r = dowling_pz(n);
    TQPoly p = o.scaled ? scale_t_by_qsquared(r.p) : r.p;
    if (o.format == "latex") {
      os << tqpoly_to_factored_string(p) << "\n";
    } else if (o.format == "csv") {
      tq_csv_rows(os, p, std::to_string(n) + ",");
    } else {
      throw UsageError("unknown format: " + o.format);
    }
  }
  return 0;
}

// ---- counts ----

struct CountsOpts {
  int n = 1;
  std::string format = "json";
  std::string out;
};

int run_counts(const CountsOpts& o) {
  WeightedCountTable t = weighted_counts(o.n);
  std::ostream& os = open_out(o.out);
  if (o.format == "json") {
    os << counts_to_json(t).dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "rank,count_all,count_simple\n";
    for (int r = 0; r <= o.n; ++r) {
      os << r << "," << qpoly_to_string(t.count_all[r]) << ","
         << qpoly_to_string(t.count_simple[r]) << "\n";
    }
  } else {
    throw UsageError("unknown format: " + o.format);
  }
  return 0;
}

// ---- lattice ----

struct LatticeOpts {
  int n = 1;
  std::string group = "cyclic:1";
  bool census_only = false;
  std::string out;
  long max_flats = 200000;
};

int run_lattice(const LatticeOpts& o) {
  FiniteGroup g = group_from_spec(o.group);
  LatticeCaps caps;
  caps.max_n = o.n;
  caps.max_group_order = g.order();
  caps.max_flats = o.max_flats;
  DowlingLattice dl(o.n, g, caps);
  Json j;
  j["n"] = o.n;
  j["group"] = o.group;
  j["census"] = Json::array();
  for (long c : dl.census()) j["census"].push_back(c);
  if (!o.census_only) {
    j["flats"] = Json::array();
    for (const auto& f : dl.flats()) j["flats"].push_back(flat_to_json(f));
  }
  open_out(o.out) << j.dump(2) << "\n";
  return 0;
}

// ---- verify ----

struct VerifyOpts {
  std::string suite;
  int max_n = 0;  // 0: per-suite default
  int max_m = 7;
};

int run_verify(const VerifyOpts& o) {
  std::vector<std::string> lines;
  if (o.suite == "theorem1") {
    int mn = o.max_n > 0 ? o.max_n : 4;
    for (int n = 1; n <= mn; ++n) {
      auto part = verify_theorem1(n);
      lines.insert(lines.end(), part.begin(), part.end());
    }
  } else if (o.suite == "lattice") {
    int mn = o.max_n > 0 ? o.max_n : 3;
    for (int n = 1; n <= mn; ++n) {
      std::vector<FiniteGroup> gs = {make_cyclic(1), make_cyclic(2),
                                     make_cyclic(3)};
      if (n <= 3) {
        gs.push_back(make_symmetric(3));
        gs.push_back(make_cyclic(6));
      }
      auto part = verify_group_independence(n, gs);
      lines.insert(lines.end(), part.begin(), part.end());
    }
  } else if (o.suite == "genfun") {
    lines = verify_genfun_bridge(o.max_n > 0 ? o.max_n : 7, {1, 2, 3});
  } else if (o.suite == "labelings") {
    lines = verify_labeling_counts(o.max_n > 0 ? o.max_n : 5, {2, 3});
  } else if (o.suite == "leading") {
    lines = verify_leading_coefficients(std::min(o.max_m, 4), o.max_m);
  } else {
    throw UsageError("unknown suite: " + o.suite +
                     " (theorem1|lattice|genfun|labelings|leading)");
  }
  for (const auto& l : lines) std::cout << l << "\n";
  std::cout << "verify " << o.suite << ": all checks passed\n";
  return 0;
}

// ---- roots ----

struct RootsOpts {
  int max_n = 0;
  std::string qs = "1,2,3,4,5";
  bool sturm = false;
  std::string pair;
  bool symbolic = false;
  std::string poly;
  std::string out;
  int threads = 0;
};

PositivityCertificate pair_certificate(const SymMatrix<QPoly>& b,
                                       int threads) {
  if (b.d <= 10) return all_minors_positive_in_u(b, threads);
  return principal_and_sampled_certificate(b);
}

// Bezout matrix of a consecutive pair; P pairs are rescaled first so the
// coefficients live in Z[q].
SymMatrix<QPoly> pair_bezout(const PairSpec& ps) {
  PZResult hi = dowling_pz(ps.hi);
  PZResult lo = dowling_pz(ps.lo);
  TQPoly f, g;
  if (ps.letter == 'P') {
    f = scale_t_by_qsquared(hi.p);
    g = scale_t_by_qsquared(lo.p);
  } else {
    f = hi.z;
    g = lo.z;
  }
  if (f.degree_or(0) < 1) {
    SymMatrix<QPoly> empty;
    empty.d = 0;
    return empty;
  }
  return bezout_matrix<QPoly>(f, g);
}

int run_roots(const RootsOpts& o) {
  std::ostream& os = open_out(o.out);
  if (!o.poly.empty()) {
    // Plain query: report, do not assert.
    std::vector<int> cs = parse_int_list(o.poly);
    RatPoly f;
    for (size_t i = 0; i < cs.size(); ++i)
      f += RatPoly::monomial(static_cast<int>(i), Rat(cs[i]));
    SturmResult s = sturm_real_rooted(f);
    Json j;
    j["kind"] = "sturm";
    j["coeffs"] = cs;
    j["real_rooted"] = s.real_rooted;
    j["distinct_real_roots"] = s.distinct_real_roots;
    j["squarefree_degree"] = s.squarefree_degree;
    os << j.dump() << "\n";
    return 0;
  }
  if (!o.pair.empty()) {
    if (!o.symbolic)
      throw UsageError("--pair needs --symbolic (exact certificates)");
    PairSpec ps = parse_pair(o.pair);
    SymMatrix<QPoly> b = pair_bezout(ps);
    for (int i = 0; i < b.d; ++i)
      for (int j = 0; j < b.d; ++j)
        os << "B[" << i << "][" << j << "] = "
           << qpoly_to_string(b.entries[static_cast<size_t>(i)]
                                        [static_cast<size_t>(j)])
           << "\n";
    QPoly det = sym_matrix_det(b);
    os << "det = " << qpoly_to_string(det) << "\n";
    os << "det_u = " << qpoly_to_string(qpoly_shift_to_u(det), "u") << "\n";
    PositivityCertificate cert = pair_certificate(b, o.threads);
    Json j = certificate_to_json("total_positivity", ps.hi, "symbolic",
                                 cert.certified, &cert, nullptr);
    j["poly"] = std::string(1, ps.letter);
    os << j.dump() << "\n";
    return cert.certified ? 0 : 3;
  }
  if (o.max_n < 1)
    throw UsageError("roots needs --max-n, --pair, or --poly");
  bool all_ok = true;
  if (o.sturm) {
    std::vector<int> qs = parse_int_list(o.qs);
    for (int n = 1; n <= o.max_n; ++n) {
      PZResult r = dowling_pz(n);
      for (int q : qs) {
        for (char which : {'P', 'Z'}) {
          TQPoly poly = which == 'P' ? r.p : r.z;
          SturmResult s = sturm_real_rooted(tq_to_ratpoly(tq_at_q(poly, q)));
          all_ok = all_ok && s.real_rooted;
          Json j = certificate_to_json("sturm", n, std::to_string(q),
                                       s.real_rooted, nullptr, &s);
          j["poly"] = std::string(1, which);
          os << j.dump() << "\n";
        }
      }
    }
  } else if (o.symbolic) {
    // Total-positivity certificates for consecutive pairs.
    for (int n = 1; n <= o.max_n; ++n) {
      for (char which : {'P', 'Z'}) {
        PairSpec ps;
        ps.letter = which;
        ps.hi = n + 1;
        ps.lo = n;
        SymMatrix<QPoly> b = pair_bezout(ps);
        PositivityCertificate cert = pair_certificate(b, o.threads);
        all_ok = all_ok && cert.certified;
        Json j = certificate_to_json("total_positivity", n + 1, "symbolic",
                                     cert.certified, &cert, nullptr);
        j["poly"] = std::string(1, which);
        os << j.dump() << "\n";
      }
    }
  } else {
    // Numeric interlacing of consecutive pairs at each sampled q.
    std::vector<int> qs = parse_int_list(o.qs);
    for (int n = 1; n <= o.max_n; ++n) {
      PZResult hi = dowling_pz(n + 1);
      PZResult lo = dowling_pz(n);
      for (int q : qs) {
        for (char which : {'P', 'Z'}) {
          TQPoly f = which == 'P' ? scale_t_by_qsquared(hi.p) : hi.z;
          TQPoly g = which == 'P' ? scale_t_by_qsquared(lo.p) : lo.z;
          Poly<Int> fq = tq_to_intpoly(tq_at_q(f, q));
          Poly<Int> gq = tq_to_intpoly(tq_at_q(g, q));
          bool ok = fq.degree_or(0) < 1 || interlaces(fq, gq);
          all_ok = all_ok && ok;
          Json j = certificate_to_json("pd", n + 1, std::to_string(q), ok,
                                       nullptr, nullptr);
          j["poly"] = std::string(1, which);
          os << j.dump() << "\n";
        }
      }
    }
  }
  return all_ok ? 0 : 3;
}

// ---- series ----

struct SeriesOpts {
  std::string which = "C";
  int order = 8;
  int q = 0;
  std::string out;
};

int run_series(const SeriesOpts& o) {
  BiSeries s(0);
  if (o.which == "C") {
    s = series_C(o.order);
  } else if (o.which == "A") {
    s = series_A(o.order);
  } else if (o.which == "S") {
    s = series_S(o.order);
  } else if (o.which == "AG" || o.which == "SG") {
    if (o.q < 1) throw UsageError("--q (a positive group order) is required "
                                  "for AG and SG");
    s = o.which == "AG" ? series_AG(o.order, o.q) : series_SG(o.order, o.q);
  } else {
    throw UsageError("unknown series: " + o.which + " (C|A|S|AG|SG)");
  }
  std::ostream& os = open_out(o.out);
  os << "n,k,numerator,denominator,count\n";
  for (int n = 0; n <= o.order; ++n) {
    RatPoly row = s.at(n);
    QPoly counts = series_count_row(s, n);
    for (int k = 0; k <= row.degree_or(0); ++k) {
      Rat c = row.coeff(k);
      if (c == 0) continue;
      os << n << "," << k << "," << c.get_num().get_str() << ","
         << c.get_den().get_str() << "," << counts.coeff(k).get_str() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kazhdan-Lusztig and Z-polynomial engine for Dowling "
               "geometries, symbolic in the group order q"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads (default: DOWLING_KL_THREADS or hardware)");

  PzOpts pz;
  CLI::App* c_pz = app.add_subcommand("pz", "KL and Z-polynomial of one rank");
  c_pz->add_option("--n", pz.n, "rank")->required();
  c_pz->add_flag("--symbolic", pz.symbolic, "symbolic in q");
  c_pz->add_option("--group", pz.group, "group spec, e.g. cyclic:2 or sym:3");
  c_pz->add_flag("--scaled", pz.scaled, "rescale P by t -> t/q^2 (P only)");
  c_pz->add_option("--format", pz.format, "text|json|latex|csv");
  c_pz->add_option("--out", pz.out, "output file (default stdout)");
  c_pz->add_option("--max-flats", pz.max_flats, "lattice size cap");

  TableOpts table;
  CLI::App* c_table = app.add_subcommand("table", "table of KL polynomials");
  c_table->add_option("--max-n", table.max_n, "largest rank");
  c_table->add_flag("--scaled", table.scaled, "rescale by t -> t/q^2");
  c_table->add_flag("--symbolic", table.symbolic, "symbolic in q (default)");
  c_table->add_option("--format", table.format, "latex|csv");
  c_table->add_option("--out", table.out, "output file (default stdout)");

  CountsOpts counts;
  CLI::App* c_counts =
      app.add_subcommand("counts", "weighted matroid count table");
  c_counts->add_option("--n", counts.n, "ground set size")->required();
  c_counts->add_option("--format", counts.format, "json|csv");
  c_counts->add_option("--out", counts.out, "output file (default stdout)");

  LatticeOpts lattice;
  CLI::App* c_lattice =
      app.add_subcommand("lattice", "explicit lattice of one geometry");
  c_lattice->add_option("--n", lattice.n, "rank")->required();
  c_lattice->add_option("--group", lattice.group, "group spec")->required();
  c_lattice->add_flag("--census", lattice.census_only,
                      "emit the rank census only");
  c_lattice->add_option("--out", lattice.out, "output file (default stdout)");
  c_lattice->add_option("--max-flats", lattice.max_flats, "lattice size cap");

  VerifyOpts verify;
  CLI::App* c_verify =
      app.add_subcommand("verify", "cross-check suites; exit 3 on mismatch");
  c_verify
      ->add_option("suite", verify.suite,
                   "theorem1|lattice|genfun|labelings|leading")
      ->required();
  c_verify->add_option("--max-n", verify.max_n, "override suite depth");
  c_verify->add_option("--max-m", verify.max_m, "leading: largest m");

  RootsOpts roots;
  CLI::App* c_roots =
      app.add_subcommand("roots", "real-rootedness and interlacing");
  c_roots->add_option("--max-n", roots.max_n, "sweep ranks 1..max-n");
  c_roots->add_option("--q", roots.qs, "comma list of q values for --sturm");
  c_roots->add_flag("--sturm", roots.sturm, "numeric Sturm checks");
  c_roots->add_option("--pair", roots.pair, "one pair, e.g. P6,P5");
  c_roots->add_flag("--symbolic", roots.symbolic,
                    "symbolic certificates (with --pair)");
  c_roots->add_option("--poly", roots.poly,
                      "ascending integer coefficients; query only");
  c_roots->add_option("--out", roots.out, "output file (default stdout)");

  SeriesOpts series;
  CLI::App* c_series =
      app.add_subcommand("series", "generating function coefficients (csv)");
  c_series->add_option("--which", series.which, "C|A|S|AG|SG");
  c_series->add_option("--order", series.order, "truncation order in x");
  c_series->add_option("--q", series.q, "group order for AG|SG");
  c_series->add_option("--out", series.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (threads > 0)
      setenv("DOWLING_KL_THREADS", std::to_string(threads).c_str(), 1);
    roots.threads = threads;
    if (app.got_subcommand(c_pz)) return run_pz(pz);
    if (app.got_subcommand(c_table)) return run_table(table);
    if (app.got_subcommand(c_counts)) return run_counts(counts);
    if (app.got_subcommand(c_lattice)) return run_lattice(lattice);
    if (app.got_subcommand(c_verify)) return run_verify(verify);
    if (app.got_subcommand(c_roots)) return run_roots(roots);
    if (app.got_subcommand(c_series)) return run_series(series);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Mismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
