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
#include <utility>
#include <vector>

#include "uemb/core/types.hpp"

namespace uemb {

/// Finitely supported vector of the Hilbert space, stored as parallel arrays
/// sorted by key. Zero coefficients are never stored.
class SparseVector {
 public:
  SparseVector() = default;

  /// Builds from unordered entries. Zero coefficients are dropped; a repeated
  /// key throws std::invalid_argument.
  static SparseVector from_entries(std::vector<std::pair<BasisKey, double>> entries);

  std::size_t support_size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  std::span<const BasisKey> keys() const { return keys_; }
  std::span<const double> values() const { return values_; }

  /// Coefficient at key, 0 if absent.
  double at(BasisKey key) const;
  double norm_sq() const;
  double norm() const;

  /// Same coefficients with every key moved up by offset.
  SparseVector shifted(std::uint32_t offset) const;

  /// Concatenation of vectors on disjoint key sets. Throws
  /// std::logic_error if the supports overlap.
  static SparseVector direct_sum(const SparseVector& a, const SparseVector& b);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<BasisKey> keys_;
  std::vector<double> values_;
};

/// Squared Euclidean distance over the union of supports.
double vec_distance_sq(const SparseVector& a, const SparseVector& b);
double vec_distance(const SparseVector& a, const SparseVector& b);

}  // namespace uemb
