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
#include <optional>
#include <stdexcept>
#include <vector>

#include "uemb/core/graph.hpp"
#include "uemb/core/types.hpp"

namespace uemb {

/// Removing a candidate hyperplane's edge class did not split the graph into
/// exactly two sides; the input is not the 1-skeleton of a CAT(0) cube complex.
class SideComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using HyperplaneId = std::uint32_t;

struct Hyperplane {
  BasisKey id;
  std::vector<EdgeId> edge_class;
  /// near_side[v] is true when v lies on the same side as the root.
  std::vector<bool> near_side;
};

/// True iff u and v lie on opposite sides of h.
inline bool separates(const Hyperplane& h, Vertex u, Vertex v) { return h.near_side[u] != h.near_side[v]; }

/// Partitions the edges of g into Djokovic-Winkler classes: edges ab and cd
/// are related iff d(a,c) + d(b,d) != d(a,d) + d(b,c). Sides come from
/// flood-filling from the root with the class removed. Classes are numbered in
/// order of their first edge. Throws SideComputationError when the relation is
/// not an equivalence or a class does not cut g into exactly two components.
std::vector<Hyperplane> hyperplanes(const Graph& g, Vertex root);

/// 1-skeleton of a finite CAT(0) cube complex together with its hyperplanes
/// and a base vertex.
class MedianGraph {
 public:
  /// Throws std::invalid_argument if g is empty, disconnected or not
  /// bipartite, and SideComputationError from hyperplanes().
  static MedianGraph build(Graph g, Vertex root);

  const Graph& graph() const { return graph_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  Vertex root() const { return root_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t hyperplane_count() const { return hyperplanes_.size(); }
  HyperplaneId hyperplane_of(EdgeId e) const { return edge_class_[e]; }

  /// Largest number of pairwise-crossing hyperplanes at a vertex, i.e. the
  /// largest set of edges at one vertex that pairwise span squares.
  unsigned dimension() const { return dimension_; }

  /// True iff h separates v from the root.
  bool far_side(HyperplaneId h, Vertex v) const { return !hyperplanes_[h].near_side[v]; }

  /// Number of hyperplanes separating u and v.
  std::uint32_t separating_count(Vertex u, Vertex v) const;

  /// Neighbor of v across h, if an edge of h is incident to v.
  std::optional<Vertex> cross(Vertex v, HyperplaneId h) const;

  std::vector<std::uint32_t> distances_from(Vertex v) const { return graph_.bfs(v); }

  /// Same skeleton with a different base vertex.
  MedianGraph with_root(Vertex root) const;

 private:
  Graph graph_;
  Vertex root_ = 0;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<HyperplaneId> edge_class_;
  unsigned dimension_ = 0;
};

/// Size of the largest set of edges at a single vertex that pairwise close
/// squares, maximized over vertices.
unsigned max_cube_dimension(const Graph& g);

}  // namespace uemb
