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

#include "uemb/metrics/sampler.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "uemb/core/parallel.hpp"

namespace uemb {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_pairs(const MetricSpace& space) {
  if (space.vertex_count < 2) throw std::invalid_argument("space needs at least two vertices to sample pairs");
}

void sort_pairs(std::vector<SampledPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const SampledPair& a, const SampledPair& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
}

void visit_exhaustive(const MetricSpace& space, const Embedding& embedding, const PairVisitor& visitor) {
  const std::size_t n = space.vertex_count;
  std::vector<SparseVector> vectors(n);
  parallel_for(n, [&](std::size_t v, unsigned) { vectors[v] = embedding(static_cast<Vertex>(v)); });
  parallel_for(n - 1, [&](std::size_t i, unsigned worker) {
    const auto u = static_cast<Vertex>(i);
    const auto row = space.distances_from(u);
    for (Vertex v = u + 1; v < n; ++v) visitor(worker, u, v, row[v], vec_distance_sq(vectors[u], vectors[v]));
  });
}

void visit_list(const std::vector<SampledPair>& pairs, const Embedding& embedding, const PairVisitor& visitor) {
  if (pairs.empty()) throw std::invalid_argument("pair sample is empty");
  std::vector<std::size_t> group_start;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i == 0 || pairs[i].u != pairs[i - 1].u) group_start.push_back(i);
  }
  group_start.push_back(pairs.size());
  parallel_for(group_start.size() - 1, [&](std::size_t g, unsigned worker) {
    const Vertex u = pairs[group_start[g]].u;
    const SparseVector eu = embedding(u);
    SparseVector ev;
    Vertex last = kUnreachable;
    for (std::size_t i = group_start[g]; i < group_start[g + 1]; ++i) {
      const auto& p = pairs[i];
      if (p.v != last) {
        ev = embedding(p.v);
        last = p.v;
      }
      visitor(worker, p.u, p.v, p.distance, vec_distance_sq(eu, ev));
    }
  });
}

}  // namespace

std::string describe(const PairSampler& sampler) {
  return std::visit(Overloaded{
                        [](const ExhaustiveSampler&) { return std::string("exhaustive"); },
                        [](const UniformSampler& s) {
                          return "uniform:" + std::to_string(s.count) + "@" + std::to_string(s.seed);
                        },
                        [](const StratifiedSampler& s) {
                          return "stratified:" + std::to_string(s.per_bucket) + "@" + std::to_string(s.seed);
                        },
                    },
                    sampler);
}

std::vector<SampledPair> draw_pairs(const MetricSpace& space, const UniformSampler& sampler) {
  require_pairs(space);
  const std::uint64_t n = space.vertex_count;
  std::mt19937_64 engine(sampler.seed);
  std::vector<SampledPair> pairs;
  pairs.reserve(sampler.count);
  for (std::uint64_t i = 0; i < sampler.count; ++i) {
    const auto a = static_cast<Vertex>(engine() % n);
    auto b = static_cast<Vertex>(engine() % (n - 1));
    if (b >= a) ++b;
    const Vertex u = std::min(a, b), v = std::max(a, b);
    pairs.push_back({u, v, space.distance(u, v)});
  }
  sort_pairs(pairs);
  return pairs;
}

std::vector<SampledPair> draw_pairs(const MetricSpace& space, const StratifiedSampler& sampler) {
  require_pairs(space);
  const std::uint64_t n = space.vertex_count;
  std::mt19937_64 engine(sampler.seed);
  std::vector<SampledPair> pairs;
  std::vector<std::size_t> start;
  std::vector<Vertex> by_distance(n);
  for (std::uint32_t s = 0; s < sampler.per_bucket; ++s) {
    const auto u = static_cast<Vertex>(engine() % n);
    const auto row = space.distances_from(u);
    std::uint32_t max_d = 0;
    for (auto d : row) {
      if (d != kUnreachable) max_d = std::max(max_d, d);
    }
    // Counting sort of the row into distance layers.
    start.assign(max_d + 2, 0);
    for (auto d : row) {
      if (d != kUnreachable) ++start[d + 1];
    }
    for (std::size_t t = 0; t <= max_d; ++t) start[t + 1] += start[t];
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (Vertex v = 0; v < n; ++v) {
      if (row[v] != kUnreachable) by_distance[fill[row[v]]++] = v;
    }
    for (std::uint32_t t = 1; t <= max_d; ++t) {
      const std::size_t size = start[t + 1] - start[t];
      if (size == 0) continue;
      const Vertex v = by_distance[start[t] + engine() % size];
      pairs.push_back({u, v, t});
    }
  }
  sort_pairs(pairs);
  return pairs;
}

void visit_pairs(const MetricSpace& space, const Embedding& embedding, const PairSampler& sampler,
                 const PairVisitor& visitor) {
  require_pairs(space);
  std::visit(Overloaded{
                 [&](const ExhaustiveSampler&) { visit_exhaustive(space, embedding, visitor); },
                 [&](const UniformSampler& s) { visit_list(draw_pairs(space, s), embedding, visitor); },
                 [&](const StratifiedSampler& s) { visit_list(draw_pairs(space, s), embedding, visitor); },
             },
             sampler);
}

}  // namespace uemb
