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

#include "uemb/core/sparse_vector.hpp"
#include "uemb/core/weight.hpp"
#include "uemb/tree/rooted_tree.hpp"

namespace uemb {

struct TreeEmbeddingOptions {
  /// When positive, appends epsilon times the unit-weight embedding on a
  /// disjoint key range [n, 2n), making the map injective. Squared distances
  /// grow by exactly epsilon^2 * d(U, V).
  double injectivity_epsilon = 0.0;
};

/// f(V) = sum_i xi(i) e_{v_i}, where v_1, ..., v_|V| are the edges of the
/// geodesic from V to the root, in that order.
SparseVector tree_embed(const RootedTree& tree, const WeightFunction& w, Vertex v,
                        const TreeEmbeddingOptions& options = {});

/// Number of basis keys tree_embed may use; keys lie in [0, tree_key_span).
std::uint32_t tree_key_span(const RootedTree& tree, const TreeEmbeddingOptions& options = {});

}  // namespace uemb
