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

#include "dkl/json_io.hpp"

#include <algorithm>

namespace dkl {

namespace {

std::vector<int> mask_to_elements(uint32_t mask) {
  std::vector<int> out;
  for (int e = 1; e <= 32; ++e) {
    if (mask & (1u << (e - 1))) out.push_back(e);
  }
  return out;
}

}  // namespace

Json qpoly_to_json(const QPoly& p) {
  Json arr = Json::array();
  int deg = p.degree_or(0);
  for (int i = 0; i <= deg; ++i) arr.push_back(p.coeff(i).get_str());
  return arr;
}

QPoly qpoly_from_json(const Json& j) {
  QPoly p;
  int i = 0;
  for (const auto& c : j) {
    Int v(c.get<std::string>());
    p += QPoly::monomial(i, v);
    ++i;
  }
  return p;
}

Json tqpoly_to_json(const TQPoly& p) {
  Json arr = Json::array();
  int deg = p.degree_or(0);
  for (int i = 0; i <= deg; ++i) arr.push_back(qpoly_to_json(p.coeff(i)));
  return arr;
}

Json matroid_to_json(const LabeledMatroid& m) {
  Json j;
  j["n"] = m.n_elements();
  Json bases = Json::array();
  for (uint32_t b : m.basis_masks()) bases.push_back(mask_to_elements(b));
  j["bases"] = bases;
  return j;
}

LabeledMatroid matroid_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::vector<int>> bases;
  for (const auto& b : j.at("bases")) {
    bases.push_back(b.get<std::vector<int>>());
  }
  return LabeledMatroid::from_bases(n, bases);
}

Json flat_to_json(const PartialGPartition& f) {
  Json j;
  j["S"] = mask_to_elements(f.support);
  Json blocks = Json::array();
  for (uint32_t b : f.blocks) blocks.push_back(mask_to_elements(b));
  j["blocks"] = blocks;
  Json labels = Json::object();
  for (int e : mask_to_elements(f.support)) {
    labels[std::to_string(e)] = f.labels[static_cast<size_t>(e)];
  }
  j["labels"] = labels;
  return j;
}

PartialGPartition flat_from_json(const Json& j, int n, const FiniteGroup& g) {
  uint32_t support = 0;
  for (int e : j.at("S").get<std::vector<int>>()) {
    support |= 1u << (e - 1);
  }
  std::vector<uint32_t> blocks;
  for (const auto& b : j.at("blocks")) {
    uint32_t mask = 0;
    for (int e : b.get<std::vector<int>>()) mask |= 1u << (e - 1);
    blocks.push_back(mask);
  }
  std::vector<int> labels(static_cast<size_t>(n) + 1, g.identity());
  for (const auto& [key, value] : j.at("labels").items()) {
    labels[static_cast<size_t>(std::stoi(key))] = value.get<int>();
  }
  return canonical_partition(n, g, support, std::move(blocks), labels);
}

Json pz_to_json(const PZResult& r, std::optional<int> q) {
  Json j;
  j["n"] = r.n;
  if (q.has_value()) {
    j["q"] = *q;
  } else {
    j["q"] = "symbolic";
  }
  j["P"] = tqpoly_to_json(r.p);
  j["Z"] = tqpoly_to_json(r.z);
  return j;
}

Json counts_to_json(const WeightedCountTable& t) {
  Json j;
  j["n"] = t.n;
  Json rows = Json::array();
  for (size_t r = 0; r < t.count_all.size(); ++r) {
    Json row;
    row["rank"] = static_cast<int>(r);
    row["count_all"] = qpoly_to_json(t.count_all[r]);
    row["count_simple"] = qpoly_to_json(t.count_simple[r]);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json certificate_to_json(const std::string& kind, int n,
                         const std::string& q, bool verdict,
                         const PositivityCertificate* cert,
                         const SturmResult* sturm) {
  Json j;
  j["kind"] = kind;
  j["n"] = n;
  // q is either the literal "symbolic" or a decimal integer.
  if (q == "symbolic") {
    j["q"] = q;
  } else {
    j["q"] = std::stoi(q);
  }
  j["verdict"] = verdict;
  if (cert != nullptr) {
    j["level"] = cert->level;
    j["dimension"] = cert->dimension;
    j["minors_checked"] = cert->minors_checked;
    if (!cert->certified) {
      Json witness;
      witness["rows"] = cert->witness_rows;
      witness["cols"] = cert->witness_cols;
      witness["value"] = cert->witness;
      j["witness"] = witness;
    }
  }
  if (sturm != nullptr) {
    j["real_rooted"] = sturm->real_rooted;
    j["distinct_real_roots"] = sturm->distinct_real_roots;
    j["squarefree_degree"] = sturm->squarefree_degree;
  }
  return j;
}

}  // namespace dkl
