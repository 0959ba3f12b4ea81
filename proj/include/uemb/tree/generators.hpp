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
#include <string>
#include <variant>

#include "uemb/core/types.hpp"
#include "uemb/tree/rooted_tree.hpp"

namespace uemb {

/// Path of `length` edges rooted at one end.
struct PathSpec {
  std::uint32_t length = 1;
};

/// `legs` disjoint paths of `leg_length` edges glued at the root.
struct SpiderSpec {
  std::uint32_t legs = 1;
  std::uint32_t leg_length = 1;
};

/// Union of `rays` root-to-leaf rays of the complete binary tree of the given depth.
struct BinarySampleSpec {
  std::uint32_t depth = 1;
  std::uint32_t rays = 1;
  std::uint64_t seed = 0;
};

/// Spine path of `spine` edges rooted at one end; every spine vertex carries a
/// pendant path of `hair` edges.
struct CaterpillarSpec {
  std::uint32_t spine = 1;
  std::uint32_t hair = 1;
};

using TreeSpec = std::variant<PathSpec, SpiderSpec, BinarySampleSpec, CaterpillarSpec>;

/// Vertex count the spec declares (an upper bound for binary samples).
std::uint64_t declared_vertex_count(const TreeSpec& spec);

/// Throws std::invalid_argument for non-positive parameters or more rays than
/// the binary tree has leaves, and BudgetError when the declared vertex count
/// exceeds vertex_budget.
RootedTree gen_tree(const TreeSpec& spec, std::uint64_t vertex_budget = kDefaultVertexBudget);

}  // namespace uemb
