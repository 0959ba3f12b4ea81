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

#include "uemb/metrics/space.hpp"

namespace uemb {

struct ProductFactor {
  std::size_t vertex_count = 0;
  /// The factor's embedding only uses keys in [0, key_span).
  std::uint32_t key_span = 0;
  Embedding embed;
};

/// Direct sum of per-factor embeddings on disjoint key ranges. Product
/// vertices are mixed-radix with the first factor varying fastest.
class ProductEmbedding {
 public:
  /// Throws std::invalid_argument for an empty factor list.
  explicit ProductEmbedding(std::vector<ProductFactor> factors);

  /// Throws std::logic_error if a factor emits a key outside its declared span.
  SparseVector operator()(std::span<const Vertex> coords) const;
  SparseVector operator()(Vertex v) const;

  std::size_t factor_count() const { return factors_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  std::uint32_t key_span() const { return offsets_.back(); }
  std::vector<Vertex> coordinates(Vertex v) const;
  Vertex flatten(std::span<const Vertex> coords) const;

 private:
  std::vector<ProductFactor> factors_;
  std::vector<std::uint32_t> offsets_;
  std::size_t vertex_count_ = 1;
};

ProductEmbedding product_embed(std::vector<ProductFactor> factors);

/// Product of factor spaces with the l1 (graph product) metric, indexed like
/// ProductEmbedding. Factor spaces must outlive the result.
MetricSpace product_space(std::vector<MetricSpace> factors);

struct NormPair {
  double l1 = 0.0;
  double l2 = 0.0;
};

/// l1 and l2 combinations of per-factor distances; l2 <= l1 <= sqrt(k) l2.
/// Throws std::invalid_argument for an empty tuple or negative entries.
NormPair l1_l2_compare(std::span<const double> distances);

}  // namespace uemb
