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

#include <vector>

#include "uemb/core/sparse_vector.hpp"
#include "uemb/core/weight.hpp"
#include "uemb/cube/median_graph.hpp"
#include "uemb/cube/normal_cube_path.hpp"

namespace uemb {

/// f(V) = sum_h xi(N_V(h)) e_h, keyed by hyperplane id.
SparseVector cube_embed(const MedianGraph& g, const WeightFunction& w, Vertex v);
SparseVector cube_embed(const NormalCubePath& path, const WeightFunction& w);

/// Bulk form of cube_embed: first cubes are computed once for every vertex
/// and weights are tabulated, so each call is a walk along the path.
class CubeEmbedder {
 public:
  CubeEmbedder(const MedianGraph& g, const WeightFunction& w);

  SparseVector operator()(Vertex v) const;
  const NormalCubeForest& forest() const { return forest_; }

 private:
  NormalCubeForest forest_;
  std::vector<double> xi_;
  Vertex root_;
};

}  // namespace uemb
