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

#include "uemb/cube/normal_cube_path.hpp"

#include <algorithm>
#include <string>

#include "uemb/core/parallel.hpp"

namespace uemb {
namespace {

constexpr std::size_t kMaxCubeDimension = 24;

}  // namespace

NormalCubePath::NormalCubePath(Vertex start, std::vector<CubeStep> steps) : start_(start), steps_(std::move(steps)) {
  std::size_t total = 0;
  for (const auto& s : steps_) total += s.crossed.size();
  index_.reserve(total);
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    for (HyperplaneId h : steps_[i].crossed) index_.emplace_back(h, static_cast<std::uint32_t>(i + 1));
  }
  std::sort(index_.begin(), index_.end());
}

std::uint32_t NormalCubePath::index(HyperplaneId h) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<HyperplaneId, std::uint32_t>{h, 0});
  return it != index_.end() && it->first == h ? it->second : 0;
}

CubeStep first_cube(const MedianGraph& g, Vertex x) {
  CubeStep step;
  step.entry = x;
  for (const auto& inc : g.graph().neighbors(x)) {
    const HyperplaneId h = g.hyperplane_of(inc.edge);
    if (g.far_side(h, x)) step.crossed.push_back(h);
  }
  std::sort(step.crossed.begin(), step.crossed.end());
  if (std::adjacent_find(step.crossed.begin(), step.crossed.end()) != step.crossed.end()) {
    throw CubeSpanError("two edges at vertex " + std::to_string(x) + " cross the same hyperplane");
  }
  const std::size_t k = step.crossed.size();
  if (k > kMaxCubeDimension) {
    throw CubeSpanError("vertex " + std::to_string(x) + " has " + std::to_string(k) +
                        " hyperplanes toward the root, more than any supported cube dimension");
  }

  // corner[mask] is the vertex reached by crossing the hyperplanes in mask.
  // Every order of crossing must reach the same corner.
  const std::size_t corners = std::size_t{1} << k;
  std::vector<Vertex> corner(corners, kUnreachable);
  corner[0] = x;
  for (std::size_t mask = 1; mask < corners; ++mask) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((mask & (std::size_t{1} << j)) == 0) continue;
      const Vertex from = corner[mask ^ (std::size_t{1} << j)];
      const HyperplaneId h = step.crossed[j];
      const auto to = g.far_side(h, from) ? g.cross(from, h) : std::nullopt;
      if (!to) {
        throw CubeSpanError("hyperplanes at vertex " + std::to_string(x) + " do not span a cube");
      }
      if (corner[mask] == kUnreachable) {
        corner[mask] = *to;
      } else if (corner[mask] != *to) {
        throw CubeSpanError("square at vertex " + std::to_string(x) + " does not close");
      }
    }
  }
  step.exit = corner[corners - 1];
  return step;
}

NormalCubePath normal_cube_path(const MedianGraph& g, Vertex v) {
  if (v >= g.vertex_count()) throw std::out_of_range("unknown vertex " + std::to_string(v));
  std::size_t separating = 0;
  for (HyperplaneId h = 0; h < g.hyperplane_count(); ++h) separating += g.far_side(h, v) ? 1 : 0;

  std::vector<CubeStep> steps;
  for (Vertex x = v; x != g.root();) {
    if (steps.size() >= separating) {
      throw NonTerminationError("normal cube path from " + std::to_string(v) + " exceeded " +
                                std::to_string(separating) + " steps");
    }
    CubeStep step = first_cube(g, x);
    if (step.crossed.empty()) {
      throw NonTerminationError("normal cube path from " + std::to_string(v) + " is stuck at vertex " +
                                std::to_string(x));
    }
    x = step.exit;
    steps.push_back(std::move(step));
  }
  return NormalCubePath(v, std::move(steps));
}

std::uint32_t index_delta_check(const NormalCubePath& pu, const NormalCubePath& pv) {
  const auto a = pu.index_map();
  const auto b = pv.index_map();
  std::uint32_t worst = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      const auto x = a[i++].second, y = b[j++].second;
      worst = std::max(worst, x > y ? x - y : y - x);
    } else if (a[i].first < b[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return worst;
}

std::uint32_t index_delta_check(const MedianGraph& g, Vertex u, Vertex v) {
  return index_delta_check(normal_cube_path(g, u), normal_cube_path(g, v));
}

NormalCubeForest::NormalCubeForest(const MedianGraph& g) : first_(g.vertex_count()), root_(g.root()) {
  parallel_for(g.vertex_count(), [&](std::size_t v, unsigned) {
    if (v != g.root()) first_[v] = first_cube(g, static_cast<Vertex>(v));
  });
  first_[root_].entry = first_[root_].exit = root_;
}

NormalCubePath NormalCubeForest::path(Vertex v) const {
  if (v >= first_.size()) throw std::out_of_range("unknown vertex " + std::to_string(v));
  std::vector<CubeStep> steps;
  for (Vertex x = v; x != root_; x = first_[x].exit) {
    if (steps.size() >= first_.size()) throw NonTerminationError("normal cube path does not reach the root");
    steps.push_back(first_[x]);
  }
  return NormalCubePath(v, std::move(steps));
}

}  // namespace uemb
