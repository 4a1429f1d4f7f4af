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

// Python bindings.  Results cross the boundary as plain dicts/lists with
// integer coefficients rendered as decimal strings, mirroring the JSON
// interface of the command line tool.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dkl/dowling.hpp"
#include "dkl/errors.hpp"
#include "dkl/genfun.hpp"
#include "dkl/group.hpp"
#include "dkl/json_io.hpp"
#include "dkl/klengine.hpp"
#include "dkl/matroid.hpp"
#include "dkl/qpoly.hpp"
#include "dkl/qsp.hpp"
#include "dkl/rootcheck.hpp"
#include "dkl/verify.hpp"

namespace py = pybind11;

namespace {

using namespace dkl;

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

DowlingLattice build_lattice(int n, const std::string& spec, long max_flats) {
  FiniteGroup g = group_from_spec(spec);
  LatticeCaps caps;
  caps.max_n = n;
  caps.max_group_order = g.order();
  caps.max_flats = max_flats;
  return DowlingLattice(n, g, caps);
}

SymMatrix<QPoly> consecutive_bezout(int n, char letter) {
  PZResult hi = dowling_pz(n + 1);
  PZResult lo = dowling_pz(n);
  TQPoly f = letter == 'P' ? scale_t_by_qsquared(hi.p) : hi.z;
  TQPoly g = letter == 'P' ? scale_t_by_qsquared(lo.p) : lo.z;
  if (f.degree_or(0) < 1) {
    SymMatrix<QPoly> empty;
    return empty;
  }
  return bezout_matrix<QPoly>(f, g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Kazhdan-Lusztig / Z-polynomial engine for Dowling "
            "geometries, symbolic in the group order q.";

  m.def(
      "kl_z",
      [](int n, bool scaled) {
        PZResult r = dowling_pz(n);
        if (scaled) r.p = scale_t_by_qsquared(r.p);
        return to_py(pz_to_json(r, std::nullopt));
      },
      py::arg("n"), py::arg("scaled") = false,
      "Symbolic P and Z for rank n; coefficient lists are ascending in t, "
      "inner lists ascending in q, entries decimal strings.");

  m.def(
      "kl_z_for_group",
      [](int n, const std::string& group, long max_flats) {
        DowlingLattice dl = build_lattice(n, group, max_flats);
        PZResult r = pz_from_lattice(lattice_from_dowling(dl),
                                     "generic(" + group + ")", max_flats);
        return to_py(pz_to_json(r, dl.group().order()));
      },
      py::arg("n"), py::arg("group"), py::arg("max_flats") = 200000,
      "P and Z computed from the explicit lattice of one concrete group "
      "('cyclic:m' or 'sym:k').");

  m.def(
      "scaled_table",
      [](int max_n) {
        std::vector<std::string> rows;
        for (int n = 1; n <= max_n; ++n)
          rows.push_back(tqpoly_to_factored_string(
              scale_t_by_qsquared(dowling_pz(n).p)));
        return rows;
      },
      py::arg("max_n"), "Factored rows of the rescaled KL table.");

  m.def(
      "weighted_counts",
      [](int n) { return to_py(counts_to_json(weighted_counts(n))); },
      py::arg("n"),
      "Per-rank weighted counts of quasi-series-parallel matroids on [n].");

  m.def(
      "whitney_row",
      [](int n) {
        std::vector<std::string> out;
        for (const auto& w : whitney_row(n)) out.push_back(qpoly_to_string(w));
        return out;
      },
      py::arg("n"),
      "Whitney numbers of the rank-n lattice, indexed by block count "
      "0..n, as polynomial strings in q.");

  m.def(
      "lattice_census",
      [](int n, const std::string& group, long max_flats) {
        return build_lattice(n, group, max_flats).census();
      },
      py::arg("n"), py::arg("group"), py::arg("max_flats") = 200000,
      "Number of flats per rank for one concrete group.");

  m.def(
      "labeling_class_count",
      [](int n, const std::vector<std::vector<int>>& bases,
         const std::string& group) {
        LabeledMatroid mat = LabeledMatroid::from_bases(n, bases);
        return static_cast<long>(
            g_labelings(mat, group_from_spec(group)).size());
      },
      py::arg("n"), py::arg("bases"), py::arg("group"),
      "Number of G-labeling classes of the matroid given by its bases.");

  m.def(
      "sturm_real_rooted",
      [](const std::vector<long>& coeffs) {
        RatPoly f;
        for (size_t i = 0; i < coeffs.size(); ++i)
          f += RatPoly::monomial(static_cast<int>(i), Rat(coeffs[i]));
        SturmResult s = sturm_real_rooted(f);
        py::dict d;
        d["real_rooted"] = s.real_rooted;
        d["distinct_real_roots"] = s.distinct_real_roots;
        d["squarefree_degree"] = s.squarefree_degree;
        return d;
      },
      py::arg("coeffs"),
      "Sturm real-rootedness of a polynomial given by ascending integer "
      "coefficients.");

  m.def(
      "total_positivity_certificate",
      [](int n, const std::string& which) {
        if (which != "P" && which != "Z")
          throw UsageError("which must be 'P' or 'Z'");
        SymMatrix<QPoly> b = consecutive_bezout(n, which[0]);
        PositivityCertificate cert = b.d <= 10
                                         ? all_minors_positive_in_u(b)
                                         : principal_and_sampled_certificate(b);
        Json j = certificate_to_json("total_positivity", n + 1, "symbolic",
                                     cert.certified, &cert, nullptr);
        j["poly"] = which;
        return to_py(j);
      },
      py::arg("n"), py::arg("which"),
      "Symbolic positivity certificate for the Bezout matrix of the "
      "consecutive pair at ranks (n+1, n).");

  m.def(
      "series_counts",
      [](const std::string& which, int order, int q) {
        BiSeries s(0);
        if (which == "C") {
          s = series_C(order);
        } else if (which == "A") {
          s = series_A(order);
        } else if (which == "S") {
          s = series_S(order);
        } else if (which == "AG") {
          s = series_AG(order, q);
        } else if (which == "SG") {
          s = series_SG(order, q);
        } else {
          throw UsageError("unknown series: " + which);
        }
        std::vector<std::vector<std::string>> rows;
        for (int n = 0; n <= order; ++n) {
          QPoly row = series_count_row(s, n);
          std::vector<std::string> r;
          for (int k = 0; k <= row.degree_or(0); ++k)
            r.push_back(row.coeff(k).get_str());
          rows.push_back(r);
        }
        return rows;
      },
      py::arg("which"), py::arg("order"), py::arg("q") = 0,
      "n!-scaled coefficient rows of a named generating function, "
      "ascending in the rank variable.");

  m.def("verify_theorem1", &verify_theorem1, py::arg("n"),
        "Cross-check the symbolic engine against weighted enumeration at "
        "rank n; returns report lines, raises on mismatch.");

  py::register_exception<CapExceeded>(m, "CapExceededError");
  py::register_exception<Mismatch>(m, "MismatchError");
  py::register_exception<UsageError>(m, "UsageError");
}
