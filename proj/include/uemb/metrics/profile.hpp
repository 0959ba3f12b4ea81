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

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "uemb/metrics/sampler.hpp"
#include "uemb/metrics/space.hpp"

namespace uemb {

struct ProfileEntry {
  std::uint32_t t = 0;
  /// Smallest embedded distance over sampled pairs with metric distance >= t.
  double rho_hat = 0.0;
  /// Largest embedded distance over sampled pairs with metric distance <= t.
  double delta_hat = 0.0;
  /// Sampled pairs at metric distance exactly t.
  std::uint64_t pairs = 0;
};

/// Empirical compression and dilatation, one entry per realized distance in
/// ascending order.
struct CompressionProfile {
  std::vector<ProfileEntry> entries;
  std::string space;
  std::string weight;
  std::string sampler;
};

/// Per-distance extremes of embedded distances before the suffix/prefix pass.
struct DistanceBucket {
  double min = std::numeric_limits<double>::infinity();
  double max = 0.0;
  std::uint64_t count = 0;
};

/// Turns buckets indexed by metric distance into a profile: suffix minimum
/// for rho_hat, prefix maximum for delta_hat. Empty buckets produce no entry.
std::vector<ProfileEntry> profile_entries(const std::vector<DistanceBucket>& buckets);

/// Throws std::invalid_argument if the space has fewer than two vertices or
/// the sample is empty.
CompressionProfile profile(const MetricSpace& space, const Embedding& embedding, const PairSampler& sampler,
                           std::string weight_descriptor = {});

/// Profile of the union of the two pair samples behind a and b.
CompressionProfile merge_profiles(const CompressionProfile& a, const CompressionProfile& b);

}  // namespace uemb
