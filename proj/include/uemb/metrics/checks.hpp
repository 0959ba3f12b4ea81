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

#include "uemb/core/weight.hpp"
#include "uemb/cube/median_graph.hpp"
#include "uemb/tree/rooted_tree.hpp"

namespace uemb {

/// Outcome of one exhaustive invariant sweep.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  /// Worst slack observed; negative when the check failed.
  double margin = 0.0;
  std::string detail;
};

/// Relative tolerance for identities that hold exactly in real arithmetic.
inline constexpr double kIdentityTolerance = 1e-9;
/// Relative rounding allowance for inequalities that can be tight.
inline constexpr double kRoundingSlack = 1e-12;

/// Unit weight, all pairs: |f(U) - f(V)|^2 = d(U, V).
CheckResult check_unit_oracle(const RootedTree& tree);
/// Unit weight, all pairs: |f(U) - f(V)|^2 = BFS distance, and BFS distance
/// equals the number of separating hyperplanes.
CheckResult check_unit_oracle(const MedianGraph& g);

/// Every edge: |f(U) - f(V)|^2 <= edge_sq_bound(w, n), n = 1 for trees.
CheckResult check_edge_dilatation(const RootedTree& tree, const WeightFunction& w);
CheckResult check_edge_dilatation(const MedianGraph& g, const WeightFunction& w);

/// All pairs: |f(U) - f(V)|^2 >= sum_{i<=s} xi(i)^2 where s is the longer
/// branch below the meeting point.
CheckResult check_tree_compression(const RootedTree& tree, const WeightFunction& w);

/// All pairs: |f(U) - f(V)|^2 >= sum_{i <= floor(d / 2n)} xi(i)^2.
CheckResult check_cube_compression(const MedianGraph& g, const WeightFunction& w);

/// Normal cube path structure over every vertex and edge: the crossed sets
/// partition the separating hyperplanes, each has at most n elements and is a
/// diagonal step, every edge satisfies |N_U(h) - N_V(h)| <= 1 on common
/// separators, and the edge's own hyperplane has indices {0, 1}.
CheckResult check_normal_paths(const MedianGraph& g);

/// Randomized l1/l2 comparisons and product distance identities.
CheckResult check_product_identities(std::uint64_t seed, std::uint64_t count);

}  // namespace uemb
