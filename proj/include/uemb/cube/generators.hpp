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
#include <variant>
#include <vector>

#include "uemb/cube/median_graph.hpp"
#include "uemb/tree/generators.hpp"

namespace uemb {

/// A tree viewed as a 1-dimensional cube complex; vertex ids and root are kept.
struct FromTreeSpec {
  TreeSpec tree;
};

/// Grid [0, d1] x [0, d2] (x [0, d3]) rooted at the origin. Vertex ids are
/// mixed-radix with the first coordinate varying fastest.
struct GridSpec {
  std::vector<std::uint32_t> dims;
};

/// Young-diagram shaped square complex: column j holds heights[j] unit
/// squares stacked from the bottom. Heights must be positive and
/// non-increasing. Rooted at the bottom-left corner.
struct StaircaseSpec {
  std::vector<std::uint32_t> heights;
};

/// Cartesian product of two trees rooted at (root, root). Vertex (a, b) has
/// id a + |left| * b.
struct TreeProductSpec {
  TreeSpec left;
  TreeSpec right;
};

using CubeSpec = std::variant<FromTreeSpec, GridSpec, StaircaseSpec, TreeProductSpec>;

/// Heights k, k-1, ..., 1.
StaircaseSpec staircase_columns(std::uint32_t columns);

std::uint64_t declared_vertex_count(const CubeSpec& spec);

/// Builds the 1-skeleton as a plain graph with its designated root.
std::pair<Graph, Vertex> gen_cube_skeleton(const CubeSpec& spec, std::uint64_t vertex_budget = kDefaultVertexBudget);

/// Builds the skeleton and its hyperplane structure. Throws
/// std::invalid_argument on bad parameters and BudgetError past the budget.
MedianGraph gen_cube(const CubeSpec& spec, std::uint64_t vertex_budget = kDefaultVertexBudget);

}  // namespace uemb
