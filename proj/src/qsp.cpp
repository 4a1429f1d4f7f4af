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

#include "dkl/qsp.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace dkl {

namespace {

uint32_t bit(int e) { return 1u << (e - 1); }

void check_cap(int n, int cap) {
  if (n < 1) throw UsageError("need at least one element");
  if (n > cap || cap > 16) {
    throw CapExceeded("enumeration capped at " + std::to_string(cap) +
                      " elements");
  }
}

}  // namespace

std::map<uint32_t, std::vector<LabeledMatroid>> connected_sp_by_support(
    int n, int cap) {
  check_cap(n, cap);
  std::set<LabeledMatroid> seen;
  std::vector<LabeledMatroid> frontier;
  for (int e = 1; e <= n; ++e) {
    for (const LabeledMatroid& m : {single_loop(e), single_coloop(e)}) {
      if (seen.insert(m).second) frontier.push_back(m);
    }
  }
  while (!frontier.empty()) {
    std::vector<LabeledMatroid> next;
    for (const LabeledMatroid& m : frontier) {
      for (int at = 1; at <= n; ++at) {
        if (!(m.ground() & bit(at))) continue;
        bool at_loop = m.is_loop(at);
        bool at_coloop = m.is_coloop(at);
        for (int fresh = 1; fresh <= n; ++fresh) {
          if (m.ground() & bit(fresh)) continue;
          if (!at_loop) {
            LabeledMatroid ext = parallel_extension(m, at, fresh);
            if (seen.insert(ext).second) next.push_back(ext);
          }
          if (!at_coloop) {
            LabeledMatroid ext = series_extension(m, at, fresh);
            if (seen.insert(ext).second) next.push_back(ext);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::map<uint32_t, std::vector<LabeledMatroid>> by_support;
  for (const LabeledMatroid& m : seen) by_support[m.ground()].push_back(m);
  for (auto& [mask, list] : by_support) std::sort(list.begin(), list.end());
  return by_support;
}

std::vector<LabeledMatroid> connected_sp(int n, int cap) {
  auto by_support = connected_sp_by_support(n, cap);
  uint32_t full = (1u << n) - 1;
  auto it = by_support.find(full);
  if (it == by_support.end()) return {};
  return it->second;
}

namespace {

// Set partitions of {1..n} as block masks, in restricted-growth order.
std::vector<std::vector<uint32_t>> set_partitions(int n) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  while (true) {
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<uint32_t> part(static_cast<size_t>(blocks), 0);
    for (int i = 0; i < n; ++i) {
      part[static_cast<size_t>(rgs[static_cast<size_t>(i)])] |= bit(i + 1);
    }
    out.push_back(std::move(part));
    // Advance the restricted growth string.
    int i = n - 1;
    for (; i > 0; --i) {
      int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<size_t>(i)] <= prefix_max) break;
    }
    if (i == 0) break;
    ++rgs[static_cast<size_t>(i)];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

}  // namespace

std::vector<LabeledMatroid> qsp_all(int n, int cap) {
  check_cap(n, cap);
  auto by_support = connected_sp_by_support(n, cap);
  std::vector<LabeledMatroid> out;
  for (const auto& partition : set_partitions(n)) {
    // Cartesian product of the per-block connected lists.
    std::vector<LabeledMatroid> acc;
    bool first = true;
    for (uint32_t block : partition) {
      const auto& pieces = by_support.at(block);
      if (first) {
        acc = pieces;
        first = false;
        continue;
      }
      std::vector<LabeledMatroid> next;
      next.reserve(acc.size() * pieces.size());
      for (const LabeledMatroid& a : acc) {
        for (const LabeledMatroid& p : pieces) next.push_back(direct_sum(a, p));
      }
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabeledMatroid> qsp_simple(int n, int cap) {
  std::vector<LabeledMatroid> out;
  for (const LabeledMatroid& m : qsp_all(n, cap)) {
    if (m.is_simple()) out.push_back(m);
  }
  return out;
}

WeightedCountTable weighted_counts(int n, int cap) {
  WeightedCountTable table;
  table.n = n;
  table.count_all.assign(static_cast<size_t>(n) + 1, QPoly());
  table.count_simple.assign(static_cast<size_t>(n) + 1, QPoly());
  for (const LabeledMatroid& m : qsp_all(n, cap)) {
    int c = m.component_count();
    QPoly w = QPoly::monomial(n - c, Int(1));
    table.count_all[static_cast<size_t>(m.rank())] += w;
    if (m.is_simple()) {
      table.count_simple[static_cast<size_t>(m.rank())] += w;
    }
  }
  return table;
}

GLabeling canonical_labeling(const LabeledMatroid& m, const FiniteGroup& g,
                             const std::vector<int>& labels) {
  GLabeling out;
  out.matroid = m;
  out.labels.assign(33, g.identity());
  for (const auto& comp : m.components()) {
    int anchor = labels.at(static_cast<size_t>(comp.front()));
    int shift = g.inv(anchor);
    for (int e : comp) {
      out.labels[static_cast<size_t>(e)] =
          g.mul(shift, labels.at(static_cast<size_t>(e)));
    }
  }
  return out;
}

std::vector<GLabeling> g_labelings(const LabeledMatroid& m,
                                   const FiniteGroup& g) {
  auto comps = m.components();
  // Free positions: everything except each component's minimum.
  std::vector<int> free_elems;
  for (const auto& comp : comps) {
    for (size_t i = 1; i < comp.size(); ++i) free_elems.push_back(comp[i]);
  }
  double estimate = 1.0;
  for (size_t i = 0; i < free_elems.size(); ++i) estimate *= g.order();
  if (estimate > 2e6) throw CapExceeded("too many labeling classes");
  std::vector<GLabeling> out;
  std::vector<int> counter(free_elems.size(), 0);
  while (true) {
    GLabeling lab;
    lab.matroid = m;
    lab.labels.assign(33, g.identity());
    for (size_t i = 0; i < free_elems.size(); ++i) {
      lab.labels[static_cast<size_t>(free_elems[i])] = counter[i];
    }
    out.push_back(std::move(lab));
    size_t i = 0;
    for (; i < free_elems.size(); ++i) {
      if (counter[i] + 1 < g.order()) {
        ++counter[i];
        break;
      }
      counter[i] = 0;
    }
    if (i == free_elems.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dkl
