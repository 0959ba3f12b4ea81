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

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "uemb/core/graph.hpp"

namespace uemb {

struct MedianVerdict {
  bool valid = true;
  std::optional<std::array<Vertex, 3>> violation;
  std::string reason;
  std::uint64_t triples_checked = 0;
};

/// Checks that every vertex triple has exactly one median, i.e. exactly one
/// vertex on geodesics between each pair. All ordered triples are checked
/// when there are at most triple_budget of them; otherwise triple_budget
/// triples are drawn from a generator seeded with `seed`.
MedianVerdict validate_median(const Graph& g, std::uint64_t triple_budget, std::uint64_t seed = 0);

}  // namespace uemb
