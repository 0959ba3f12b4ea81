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

#include "uemb/cube/embedding.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace uemb {

SparseVector cube_embed(const NormalCubePath& path, const WeightFunction& w) {
  std::vector<std::pair<BasisKey, double>> entries;
  entries.reserve(path.index_map().size());
  for (const auto& [h, i] : path.index_map()) entries.emplace_back(BasisKey{h}, w(static_cast<double>(i)));
  return SparseVector::from_entries(std::move(entries));
}

SparseVector cube_embed(const MedianGraph& g, const WeightFunction& w, Vertex v) {
  return cube_embed(normal_cube_path(g, v), w);
}

CubeEmbedder::CubeEmbedder(const MedianGraph& g, const WeightFunction& w)
    : forest_(g), xi_(g.hyperplane_count() + 1, 0.0), root_(g.root()) {
  for (std::size_t i = 1; i < xi_.size(); ++i) xi_[i] = w(static_cast<double>(i));
}

SparseVector CubeEmbedder::operator()(Vertex v) const {
  std::vector<std::pair<BasisKey, double>> entries;
  std::uint32_t index = 0;
  for (Vertex x = v; x != root_;) {
    const CubeStep& step = forest_.first_step(x);
    if (++index >= xi_.size()) throw NonTerminationError("normal cube path from " + std::to_string(v) + " is too long");
    for (HyperplaneId h : step.crossed) entries.emplace_back(BasisKey{h}, xi_[index]);
    x = step.exit;
  }
  return SparseVector::from_entries(std::move(entries));
}

}  // namespace uemb
