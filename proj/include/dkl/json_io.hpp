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

#ifndef DKL_JSON_IO_HPP_
#define DKL_JSON_IO_HPP_

#include <optional>
#include <string>

#include "json.hpp"

#include "dkl/dowling.hpp"
#include "dkl/klengine.hpp"
#include "dkl/matroid.hpp"
#include "dkl/qsp.hpp"
#include "dkl/rootcheck.hpp"

namespace dkl {

using Json = nlohmann::json;

// Integer coefficients are serialized as decimal strings; the values
// outgrow 64-bit integers quickly.
Json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);
Json tqpoly_to_json(const TQPoly& p);

Json matroid_to_json(const LabeledMatroid& m);
LabeledMatroid matroid_from_json(const Json& j);

// Canonical flat form: {"S": [...], "blocks": [[...]...],
// "labels": {"element": index}}.
Json flat_to_json(const PartialGPartition& f);
PartialGPartition flat_from_json(const Json& j, int n, const FiniteGroup& g);

// {"n":..., "q": "symbolic" | integer, "P": [[...]...], "Z": [[...]...]}.
Json pz_to_json(const PZResult& r, std::optional<int> q);

Json counts_to_json(const WeightedCountTable& t);

Json certificate_to_json(const std::string& kind, int n,
                         const std::string& q, bool verdict,
                         const PositivityCertificate* cert,
                         const SturmResult* sturm);

}  // namespace dkl

#endif  // DKL_JSON_IO_HPP_
