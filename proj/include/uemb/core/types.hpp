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

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace uemb {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Identifies one basis vector of the target Hilbert space. Trees key a basis
// vector by edge, cube complexes by hyperplane.
struct BasisKey {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(BasisKey, BasisKey) = default;
};

// Raised when a generator or loader would exceed the configured vertex budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default vertex budget for generated spaces.
inline constexpr std::uint64_t kDefaultVertexBudget = 20'000'000;

}  // namespace uemb

template <>
struct std::hash<uemb::BasisKey> {
  std::size_t operator()(uemb::BasisKey k) const noexcept { return std::hash<std::uint32_t>{}(k.value); }
};
