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

#include "uemb/metrics/product.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

namespace uemb {

ProductEmbedding::ProductEmbedding(std::vector<ProductFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("product needs at least one factor");
  offsets_.push_back(0);
  for (const auto& f : factors_) {
    if (std::uint64_t{offsets_.back()} + f.key_span > std::numeric_limits<std::uint32_t>::max()) {
      throw std::logic_error("product key ranges overflow the key space");
    }
    offsets_.push_back(offsets_.back() + f.key_span);
    vertex_count_ *= f.vertex_count;
  }
}

SparseVector ProductEmbedding::operator()(std::span<const Vertex> coords) const {
  if (coords.size() != factors_.size()) throw std::invalid_argument("wrong number of product coordinates");
  SparseVector out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const SparseVector part = factors_[i].embed(coords[i]);
    if (!part.empty() && part.keys().back().value >= factors_[i].key_span) {
      throw std::logic_error("key-range collision: factor " + std::to_string(i) + " emitted key " +
                             std::to_string(part.keys().back().value) + " outside its span");
    }
    out = SparseVector::direct_sum(out, part.shifted(offsets_[i]));
  }
  return out;
}

SparseVector ProductEmbedding::operator()(Vertex v) const {
  const auto coords = coordinates(v);
  return (*this)(coords);
}

std::vector<Vertex> ProductEmbedding::coordinates(Vertex v) const {
  std::vector<Vertex> coords(factors_.size());
  std::uint64_t rest = v;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    coords[i] = static_cast<Vertex>(rest % factors_[i].vertex_count);
    rest /= factors_[i].vertex_count;
  }
  return coords;
}

Vertex ProductEmbedding::flatten(std::span<const Vertex> coords) const {
  std::uint64_t v = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) v = v * factors_[i].vertex_count + coords[i];
  return static_cast<Vertex>(v);
}

ProductEmbedding product_embed(std::vector<ProductFactor> factors) { return ProductEmbedding(std::move(factors)); }

MetricSpace product_space(std::vector<MetricSpace> factors) {
  if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
  auto shared = std::make_shared<std::vector<MetricSpace>>(std::move(factors));
  MetricSpace space;
  space.vertex_count = 1;
  for (const auto& f : *shared) {
    space.descriptor += (space.descriptor.empty() ? "" : "x") + f.descriptor;
    space.vertex_count *= f.vertex_count;
  }
  auto split = [shared](Vertex v) {
    std::vector<Vertex> coords(shared->size());
    std::uint64_t rest = v;
    for (std::size_t i = 0; i < shared->size(); ++i) {
      coords[i] = static_cast<Vertex>(rest % (*shared)[i].vertex_count);
      rest /= (*shared)[i].vertex_count;
    }
    return coords;
  };
  space.distance = [shared, split](Vertex u, Vertex v) {
    const auto cu = split(u), cv = split(v);
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < shared->size(); ++i) d += (*shared)[i].distance(cu[i], cv[i]);
    return d;
  };
  space.distances_from = [shared, split, n = space.vertex_count](Vertex u) {
    const auto cu = split(u);
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < shared->size(); ++i) rows.push_back((*shared)[i].distances_from(cu[i]));
    std::vector<std::uint32_t> out(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      std::uint64_t rest = v;
      for (std::size_t i = 0; i < shared->size(); ++i) {
        out[v] += rows[i][rest % (*shared)[i].vertex_count];
        rest /= (*shared)[i].vertex_count;
      }
    }
    return out;
  };
  return space;
}

NormPair l1_l2_compare(std::span<const double> distances) {
  if (distances.empty()) throw std::invalid_argument("l1_l2_compare needs at least one distance");
  NormPair out;
  double sq = 0.0;
  for (double d : distances) {
    if (!(d >= 0.0)) throw std::invalid_argument("distances must be non-negative");
    out.l1 += d;
    sq += d * d;
  }
  out.l2 = std::sqrt(sq);
  return out;
}

}  // namespace uemb
