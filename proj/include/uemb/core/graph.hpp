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
#include <span>
#include <utility>
#include <vector>

#include "uemb/core/types.hpp"

namespace uemb {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to = 0;
  EdgeId edge = 0;
};

/// Simple undirected graph in compressed adjacency form. Edge ids are the
/// positions in the edge list given at construction.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on out-of-range ids, self-loops or repeated edges.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Breadth-first distances from source; kUnreachable where disconnected.
  std::vector<std::uint32_t> bfs(Vertex source) const;
  void bfs(Vertex source, std::vector<std::uint32_t>& dist, std::vector<Vertex>& queue) const;

  bool is_connected() const;
  bool is_bipartite() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> adjacency_;
};

}  // namespace uemb
