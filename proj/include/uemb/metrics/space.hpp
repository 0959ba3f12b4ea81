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
#include <vector>

#include "uemb/core/sparse_vector.hpp"
#include "uemb/core/types.hpp"
#include "uemb/cube/median_graph.hpp"
#include "uemb/tree/rooted_tree.hpp"

namespace uemb {

/// Finite graph metric as seen by the profile machinery.
struct MetricSpace {
  std::string descriptor;
  std::size_t vertex_count = 0;
  /// Full distance row from a vertex (breadth-first search on the graph).
  std::function<std::vector<std::uint32_t>(Vertex)> distances_from;
  /// Single distance. Trees use the meeting point; median graphs count
  /// separating hyperplanes.
  std::function<std::uint32_t(Vertex, Vertex)> distance;
};

using Embedding = std::function<SparseVector(Vertex)>;

/// The returned space refers to `tree`, which must outlive it.
MetricSpace metric_space(const RootedTree& tree, std::string descriptor = "tree");
/// The returned space refers to `g`, which must outlive it.
MetricSpace metric_space(const MedianGraph& g, std::string descriptor = "median_graph");

}  // namespace uemb
