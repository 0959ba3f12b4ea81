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

#include "uemb/cube/validate.hpp"

#include <random>
#include <vector>

namespace uemb {
namespace {

// Distance rows are cached for every vertex on small graphs and recomputed
// per triple on large ones.
constexpr std::size_t kAllPairsLimit = 3000;

class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g) : g_(g) {
    if (g.vertex_count() <= kAllPairsLimit) {
      rows_.reserve(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v) rows_.push_back(g.bfs(v));
    }
  }

  const std::vector<std::uint32_t>& row(Vertex v, int slot) {
    if (!rows_.empty()) return rows_[v];
    g_.bfs(v, scratch_[slot], queue_);
    return scratch_[slot];
  }

 private:
  const Graph& g_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::array<std::vector<std::uint32_t>, 3> scratch_;
  std::vector<Vertex> queue_;
};

}  // namespace

MedianVerdict validate_median(const Graph& g, std::uint64_t triple_budget, std::uint64_t seed) {
  MedianVerdict verdict;
  const std::uint64_t n = g.vertex_count();
  if (n == 0) return verdict;
  if (!g.is_connected()) {
    verdict.valid = false;
    verdict.reason = "graph is not connected";
    return verdict;
  }

  DistanceOracle oracle(g);
  auto check = [&](Vertex a, Vertex b, Vertex c) {
    ++verdict.triples_checked;
    const auto& da = oracle.row(a, 0);
    const auto& db = oracle.row(b, 1);
    const auto& dc = oracle.row(c, 2);
    std::uint64_t medians = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (da[x] + db[x] == da[b] && db[x] + dc[x] == db[c] && da[x] + dc[x] == da[c]) ++medians;
    }
    if (medians != 1) {
      verdict.valid = false;
      verdict.violation = std::array<Vertex, 3>{a, b, c};
      verdict.reason = medians == 0 ? "triple has no median" : "triple has " + std::to_string(medians) + " medians";
      return false;
    }
    return true;
  };

  const bool exhaustive = n <= 2'642'245 && n * n * n <= triple_budget;  // cube root of 2^64
  if (exhaustive) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        for (Vertex c = 0; c < n; ++c) {
          if (!check(a, b, c)) return verdict;
        }
      }
    }
    return verdict;
  }
  std::mt19937_64 engine(seed);
  for (std::uint64_t i = 0; i < triple_budget; ++i) {
    const auto a = static_cast<Vertex>(engine() % n);
    const auto b = static_cast<Vertex>(engine() % n);
    const auto c = static_cast<Vertex>(engine() % n);
    if (!check(a, b, c)) return verdict;
  }
  return verdict;
}

}  // namespace uemb
