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
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "uemb/metrics/space.hpp"

namespace uemb {

/// Every unordered pair of distinct vertices.
struct ExhaustiveSampler {};

/// `count` pairs of distinct vertices drawn uniformly with replacement.
struct UniformSampler {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

/// `per_bucket` random source vertices; from each, one uniformly chosen
/// target at every distance the source realizes. Each distance bucket thus
/// receives at most `per_bucket` pairs.
struct StratifiedSampler {
  std::uint32_t per_bucket = 1000;
  std::uint64_t seed = 0;
};

using PairSampler = std::variant<ExhaustiveSampler, UniformSampler, StratifiedSampler>;

std::string describe(const PairSampler& sampler);

struct SampledPair {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t distance = 0;
  friend bool operator==(const SampledPair&, const SampledPair&) = default;
};

/// Materializes the pairs of a non-exhaustive sampler, sorted by (u, v).
/// Uniform pairs have u < v; stratified pairs are (source, target).
/// Deterministic given the seed.
std::vector<SampledPair> draw_pairs(const MetricSpace& space, const UniformSampler& sampler);
std::vector<SampledPair> draw_pairs(const MetricSpace& space, const StratifiedSampler& sampler);

/// Called once per sampled pair with the worker index, the pair, its metric
/// distance and the squared embedded distance. Calls from different workers
/// run concurrently.
using PairVisitor = std::function<void(unsigned worker, Vertex u, Vertex v, std::uint32_t distance, double embedded_sq)>;

/// Evaluates `embedding` on every sampled pair. Exhaustive mode embeds every
/// vertex once up front. Worker indices are below worker_count().
/// Throws std::invalid_argument when the sample is empty.
void visit_pairs(const MetricSpace& space, const Embedding& embedding, const PairSampler& sampler,
                 const PairVisitor& visitor);

}  // namespace uemb
