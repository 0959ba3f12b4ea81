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

#include "uemb/tree/embedding.hpp"

#include <utility>
#include <vector>

namespace uemb {

SparseVector tree_embed(const RootedTree& tree, const WeightFunction& w, Vertex v,
                        const TreeEmbeddingOptions& options) {
  const auto path = tree.geodesic_edges(v);
  const bool patch = options.injectivity_epsilon > 0.0;
  const auto offset = static_cast<std::uint32_t>(tree.vertex_count());
  std::vector<std::pair<BasisKey, double>> entries;
  entries.reserve(patch ? 2 * path.size() : path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    entries.emplace_back(path[i], w(static_cast<double>(i + 1)));
    if (patch) entries.emplace_back(BasisKey{path[i].value + offset}, options.injectivity_epsilon);
  }
  return SparseVector::from_entries(std::move(entries));
}

std::uint32_t tree_key_span(const RootedTree& tree, const TreeEmbeddingOptions& options) {
  const auto n = static_cast<std::uint32_t>(tree.vertex_count());
  return options.injectivity_epsilon > 0.0 ? 2 * n : n;
}

}  // namespace uemb
