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

#include "uemb/core/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uemb {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::vector<std::pair<Vertex, Vertex>> normalized;
  normalized.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw std::invalid_argument("edge [" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  "] references a vertex outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    normalized.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(normalized.begin(), normalized.end());
  if (auto it = std::adjacent_find(normalized.begin(), normalized.end()); it != normalized.end()) {
    throw std::invalid_argument("repeated edge [" + std::to_string(it->first) + ", " + std::to_string(it->second) +
                                "]");
  }

  offsets_.assign(vertex_count + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }
}

std::vector<std::uint32_t> Graph::bfs(Vertex source) const {
  std::vector<std::uint32_t> dist;
  std::vector<Vertex> queue;
  bfs(source, dist, queue);
  return dist;
}

void Graph::bfs(Vertex source, std::vector<std::uint32_t>& dist, std::vector<Vertex>& queue) const {
  dist.assign(vertex_count(), kUnreachable);
  queue.clear();
  queue.reserve(vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (const auto& inc : neighbors(x)) {
      if (dist[inc.to] == kUnreachable) {
        dist[inc.to] = dist[x] + 1;
        queue.push_back(inc.to);
      }
    }
  }
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  const auto dist = bfs(0);
  return std::none_of(dist.begin(), dist.end(), [](std::uint32_t d) { return d == kUnreachable; });
}

bool Graph::is_bipartite() const {
  std::vector<int> color(vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : neighbors(x)) {
        if (color[inc.to] == -1) {
          color[inc.to] = 1 - color[x];
          stack.push_back(inc.to);
        } else if (color[inc.to] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace uemb
