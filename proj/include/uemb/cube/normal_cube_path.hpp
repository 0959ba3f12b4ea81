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
#include <stdexcept>
#include <utility>
#include <vector>

#include "uemb/cube/median_graph.hpp"

namespace uemb {

/// The hyperplanes at a vertex that separate it from the root do not span a cube.
class CubeSpanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A normal cube path took more steps than there are separating hyperplanes.
class NonTerminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One cube of a normal cube path, crossed diagonally from entry to exit.
struct CubeStep {
  Vertex entry = 0;
  std::vector<HyperplaneId> crossed;  // sorted
  Vertex exit = 0;
};

/// Normal cube path from a vertex to the root, with the index function
/// N_V(h) = i when h is crossed by the i-th cube and 0 otherwise.
class NormalCubePath {
 public:
  NormalCubePath(Vertex start, std::vector<CubeStep> steps);

  Vertex start() const { return start_; }
  const std::vector<CubeStep>& steps() const { return steps_; }
  /// Number of cubes, written ||V||.
  std::size_t length() const { return steps_.size(); }
  /// N_V(h).
  std::uint32_t index(HyperplaneId h) const;
  /// (h, N_V(h)) for every h with N_V(h) > 0, sorted by h.
  std::span<const std::pair<HyperplaneId, std::uint32_t>> index_map() const { return index_; }

 private:
  Vertex start_;
  std::vector<CubeStep> steps_;
  std::vector<std::pair<HyperplaneId, std::uint32_t>> index_;
};

/// First cube of the normal cube path from x: all hyperplanes of edges at x
/// that separate x from the root, checked to span a cube at x and crossed to
/// the opposite corner. Throws CubeSpanError if they do not span a cube.
CubeStep first_cube(const MedianGraph& g, Vertex x);

/// Iterates first_cube until the root is reached. Throws std::out_of_range for
/// unknown vertices, CubeSpanError, or NonTerminationError.
NormalCubePath normal_cube_path(const MedianGraph& g, Vertex v);

/// max |N_U(h) - N_V(h)| over hyperplanes h separating both U and V from the
/// root; 0 when there are none. U and V must be adjacent.
std::uint32_t index_delta_check(const MedianGraph& g, Vertex u, Vertex v);
std::uint32_t index_delta_check(const NormalCubePath& pu, const NormalCubePath& pv);

/// First cube of every vertex, computed once; later paths are chained lookups.
class NormalCubeForest {
 public:
  explicit NormalCubeForest(const MedianGraph& g);

  const CubeStep& first_step(Vertex v) const { return first_.at(v); }
  NormalCubePath path(Vertex v) const;

 private:
  std::vector<CubeStep> first_;
  Vertex root_;
};

}  // namespace uemb
