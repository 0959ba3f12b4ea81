// Copyright 2026 The uemb Authors.
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

#include "uemb/metrics/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uemb/core/parallel.hpp"

namespace uemb {

std::vector<ProfileEntry> profile_entries(const std::vector<DistanceBucket>& buckets) {
  std::vector<ProfileEntry> entries;
  for (std::uint32_t t = 0; t < buckets.size(); ++t) {
    if (buckets[t].count > 0) entries.push_back({t, buckets[t].min, buckets[t].max, buckets[t].count});
  }
  for (std::size_t i = entries.size(); i-- > 1;) {
    entries[i - 1].rho_hat = std::min(entries[i - 1].rho_hat, entries[i].rho_hat);
  }
  for (std::size_t i = 1; i < entries.size(); ++i) {
    entries[i].delta_hat = std::max(entries[i].delta_hat, entries[i - 1].delta_hat);
  }
  return entries;
}

CompressionProfile profile(const MetricSpace& space, const Embedding& embedding, const PairSampler& sampler,
                           std::string weight_descriptor) {
  std::vector<std::vector<DistanceBucket>> per_worker(worker_count());
  visit_pairs(space, embedding, sampler, [&](unsigned worker, Vertex, Vertex, std::uint32_t d, double embedded_sq) {
    auto& buckets = per_worker[worker];
    if (d >= buckets.size()) buckets.resize(d + 1);
    auto& b = buckets[d];
    const double e = std::sqrt(embedded_sq);
    b.min = std::min(b.min, e);
    b.max = std::max(b.max, e);
    ++b.count;
  });

  std::vector<DistanceBucket> merged;
  for (const auto& buckets : per_worker) {
    if (buckets.size() > merged.size()) merged.resize(buckets.size());
    for (std::size_t t = 0; t < buckets.size(); ++t) {
      merged[t].min = std::min(merged[t].min, buckets[t].min);
      merged[t].max = std::max(merged[t].max, buckets[t].max);
      merged[t].count += buckets[t].count;
    }
  }
  CompressionProfile p;
  p.entries = profile_entries(merged);
  if (p.entries.empty()) throw std::invalid_argument("pair sample is empty");
  p.space = space.descriptor;
  p.weight = std::move(weight_descriptor);
  p.sampler = describe(sampler);
  return p;
}

CompressionProfile merge_profiles(const CompressionProfile& a, const CompressionProfile& b) {
  // A profile row already folds in every pair at larger (rho) or smaller
  // (delta) distance, so each side is extended to the union of realized
  // distances by looking up its nearest realized row.
  auto rho_at = [](const std::vector<ProfileEntry>& e, std::uint32_t t) {
    auto it = std::lower_bound(e.begin(), e.end(), t, [](const ProfileEntry& x, std::uint32_t v) { return x.t < v; });
    return it == e.end() ? std::numeric_limits<double>::infinity() : it->rho_hat;
  };
  auto delta_at = [](const std::vector<ProfileEntry>& e, std::uint32_t t) {
    auto it = std::upper_bound(e.begin(), e.end(), t, [](std::uint32_t v, const ProfileEntry& x) { return v < x.t; });
    return it == e.begin() ? 0.0 : std::prev(it)->delta_hat;
  };
  auto pairs_at = [](const std::vector<ProfileEntry>& e, std::uint32_t t) -> std::uint64_t {
    auto it = std::lower_bound(e.begin(), e.end(), t, [](const ProfileEntry& x, std::uint32_t v) { return x.t < v; });
    return it != e.end() && it->t == t ? it->pairs : 0;
  };

  std::vector<std::uint32_t> ts;
  for (const auto& e : a.entries) ts.push_back(e.t);
  for (const auto& e : b.entries) ts.push_back(e.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  CompressionProfile out;
  out.space = a.space == b.space ? a.space : a.space + "+" + b.space;
  out.weight = a.weight == b.weight ? a.weight : a.weight + "+" + b.weight;
  out.sampler = a.sampler + "+" + b.sampler;
  for (auto t : ts) {
    out.entries.push_back({t, std::min(rho_at(a.entries, t), rho_at(b.entries, t)),
                           std::max(delta_at(a.entries, t), delta_at(b.entries, t)),
                           pairs_at(a.entries, t) + pairs_at(b.entries, t)});
  }
  return out;
}

}  // namespace uemb
