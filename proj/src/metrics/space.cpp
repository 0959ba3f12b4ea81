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

#include "uemb/metrics/space.hpp"

namespace uemb {

MetricSpace metric_space(const RootedTree& tree, std::string descriptor) {
  MetricSpace space;
  space.descriptor = std::move(descriptor);
  space.vertex_count = tree.vertex_count();
  space.distances_from = [&tree](Vertex v) { return tree.distances_from(v); };
  space.distance = [&tree](Vertex u, Vertex v) { return tree.distance(u, v); };
  return space;
}

MetricSpace metric_space(const MedianGraph& g, std::string descriptor) {
  MetricSpace space;
  space.descriptor = std::move(descriptor);
  space.vertex_count = g.vertex_count();
  space.distances_from = [&g](Vertex v) { return g.distances_from(v); };
  space.distance = [&g](Vertex u, Vertex v) { return g.separating_count(u, v); };
  return space;
}

}  // namespace uemb
