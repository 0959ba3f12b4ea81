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
#include <vector>

#include "uemb/core/graph.hpp"
#include "uemb/core/types.hpp"

namespace uemb {

/// Finite rooted tree with unit-length edges. The edge joining v to its parent
/// is keyed by v, so keys live in [0, vertex_count()) and the root's key is unused.
class RootedTree {
 public:
  /// parent[root] == root for exactly one vertex. Throws std::invalid_argument
  /// on out-of-range parents, several roots, or cycles.
  static RootedTree from_parents(std::vector<Vertex> parent);
  /// Orients an undirected edge list away from root. The edges must form a tree.
  static RootedTree from_edges(std::size_t vertex_count, const std::vector<Edge>& edges, Vertex root);

  std::size_t vertex_count() const { return parent_.size(); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_.at(v); }
  std::uint32_t depth(Vertex v) const { return depth_.at(v); }
  std::uint32_t height() const { return height_; }
  const std::vector<Vertex>& parents() const { return parent_; }
  std::span<const Vertex> children(Vertex v) const {
    return {child_list_.data() + child_offset_[v], child_list_.data() + child_offset_[v + 1]};
  }

  static BasisKey edge_key(Vertex child) { return BasisKey{child}; }

  /// Edges of the geodesic from v to the root, ordered from v. Throws
  /// std::out_of_range for unknown vertices.
  std::vector<BasisKey> geodesic_edges(Vertex v) const;

  /// Deepest common ancestor of u and v.
  Vertex meeting_point(Vertex u, Vertex v) const;
  std::uint32_t distance(Vertex u, Vertex v) const;
  std::vector<std::uint32_t> distances_from(Vertex source) const;

  /// (v, parent(v)) for every non-root v, in increasing order of v.
  std::vector<Edge> edges() const;
  Graph to_graph() const { return Graph(vertex_count(), edges()); }

 private:
  void check(Vertex v) const;

  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::size_t> child_offset_;
  std::vector<Vertex> child_list_;
  Vertex root_ = 0;
  std::uint32_t height_ = 0;
};

}  // namespace uemb
