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

#include "uemb/core/sparse_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uemb {

SparseVector SparseVector::from_entries(std::vector<std::pair<BasisKey, double>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector v;
  v.keys_.reserve(entries.size());
  v.values_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first == entries[i - 1].first) {
      throw std::invalid_argument("SparseVector: repeated key " + std::to_string(entries[i].first.value));
    }
    if (entries[i].second == 0.0) continue;
    v.keys_.push_back(entries[i].first);
    v.values_.push_back(entries[i].second);
  }
  return v;
}

double SparseVector::at(BasisKey key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return 0.0;
  return values_[static_cast<std::size_t>(it - keys_.begin())];
}

double SparseVector::norm_sq() const {
  double s = 0.0;
  for (double x : values_) s += x * x;
  return s;
}

double SparseVector::norm() const { return std::sqrt(norm_sq()); }

SparseVector SparseVector::shifted(std::uint32_t offset) const {
  SparseVector v = *this;
  for (auto& k : v.keys_) k.value += offset;
  return v;
}

SparseVector SparseVector::direct_sum(const SparseVector& a, const SparseVector& b) {
  SparseVector v;
  v.keys_.reserve(a.keys_.size() + b.keys_.size());
  v.values_.reserve(a.keys_.size() + b.keys_.size());
  std::size_t i = 0, j = 0;
  while (i < a.keys_.size() || j < b.keys_.size()) {
    if (i < a.keys_.size() && j < b.keys_.size() && a.keys_[i] == b.keys_[j]) {
      throw std::logic_error("direct_sum: supports overlap at key " + std::to_string(a.keys_[i].value));
    }
    if (j == b.keys_.size() || (i < a.keys_.size() && a.keys_[i] < b.keys_[j])) {
      v.keys_.push_back(a.keys_[i]);
      v.values_.push_back(a.values_[i++]);
    } else {
      v.keys_.push_back(b.keys_[j]);
      v.values_.push_back(b.values_[j++]);
    }
  }
  return v;
}

double vec_distance_sq(const SparseVector& a, const SparseVector& b) {
  const auto ak = a.keys(), bk = b.keys();
  const auto av = a.values(), bv = b.values();
  const std::size_t na = ak.size(), nb = bk.size();
  std::size_t i = 0, j = 0;
  double s = 0.0;
  while (i < na && j < nb) {
    if (ak[i] == bk[j]) {
      const double d = av[i++] - bv[j++];
      s += d * d;
    } else if (ak[i] < bk[j]) {
      s += av[i] * av[i];
      ++i;
    } else {
      s += bv[j] * bv[j];
      ++j;
    }
  }
  for (; i < na; ++i) s += av[i] * av[i];
  for (; j < nb; ++j) s += bv[j] * bv[j];
  return s;
}

double vec_distance(const SparseVector& a, const SparseVector& b) { return std::sqrt(vec_distance_sq(a, b)); }

}  // namespace uemb
