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

#include "uemb/tree/rooted_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uemb {

RootedTree RootedTree::from_parents(std::vector<Vertex> parent) {
  const std::size_t n = parent.size();
  if (n == 0) throw std::invalid_argument("tree must have at least one vertex");
  RootedTree t;
  bool has_root = false;
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] >= n) throw std::invalid_argument("parent of vertex " + std::to_string(v) + " is out of range");
    if (parent[v] == v) {
      if (has_root) throw std::invalid_argument("tree has more than one root");
      has_root = true;
      t.root_ = v;
    }
  }
  if (!has_root) throw std::invalid_argument("tree has no root (parent[v] == v)");

  // Resolve depths iteratively; a path longer than n means a cycle.
  constexpr std::uint32_t kUnset = kUnreachable;
  t.depth_.assign(n, kUnset);
  t.depth_[t.root_] = 0;
  std::vector<Vertex> trail;
  for (Vertex v = 0; v < n; ++v) {
    trail.clear();
    Vertex x = v;
    while (t.depth_[x] == kUnset) {
      trail.push_back(x);
      if (trail.size() > n) throw std::invalid_argument("parent relation contains a cycle");
      x = parent[x];
    }
    std::uint32_t d = t.depth_[x];
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) t.depth_[*it] = ++d;
  }
  t.parent_ = std::move(parent);
  t.height_ = *std::max_element(t.depth_.begin(), t.depth_.end());

  t.child_offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (v != t.root_) ++t.child_offset_[t.parent_[v] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) t.child_offset_[v + 1] += t.child_offset_[v];
  t.child_list_.resize(n - 1);
  std::vector<std::size_t> fill(t.child_offset_.begin(), t.child_offset_.end() - 1);
  for (Vertex v = 0; v < n; ++v) {
    if (v != t.root_) t.child_list_[fill[t.parent_[v]]++] = v;
  }
  return t;
}

RootedTree RootedTree::from_edges(std::size_t vertex_count, const std::vector<Edge>& edges, Vertex root) {
  if (root >= vertex_count) throw std::invalid_argument("root is out of range");
  if (edges.size() + 1 != vertex_count) {
    throw std::invalid_argument("a tree on " + std::to_string(vertex_count) + " vertices needs " +
                                std::to_string(vertex_count - 1) + " edges, got " + std::to_string(edges.size()));
  }
  const Graph g(vertex_count, edges);
  const auto dist = g.bfs(root);
  std::vector<Vertex> parent(vertex_count, root);
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (dist[v] == kUnreachable) throw std::invalid_argument("tree edges do not connect vertex " + std::to_string(v));
    if (v == root) continue;
    for (const auto& inc : g.neighbors(v)) {
      if (dist[inc.to] + 1 == dist[v]) {
        parent[v] = inc.to;
        break;
      }
    }
  }
  return from_parents(std::move(parent));
}

void RootedTree::check(Vertex v) const {
  if (v >= vertex_count()) throw std::out_of_range("unknown vertex " + std::to_string(v));
}

std::vector<BasisKey> RootedTree::geodesic_edges(Vertex v) const {
  check(v);
  std::vector<BasisKey> out;
  out.reserve(depth_[v]);
  for (Vertex x = v; x != root_; x = parent_[x]) out.push_back(edge_key(x));
  return out;
}

Vertex RootedTree::meeting_point(Vertex u, Vertex v) const {
  check(u);
  check(v);
  while (depth_[u] > depth_[v]) u = parent_[u];
  while (depth_[v] > depth_[u]) v = parent_[v];
  while (u != v) {
    u = parent_[u];
    v = parent_[v];
  }
  return u;
}

std::uint32_t RootedTree::distance(Vertex u, Vertex v) const {
  const Vertex s = meeting_point(u, v);
  return depth_[u] + depth_[v] - 2 * depth_[s];
}

std::vector<std::uint32_t> RootedTree::distances_from(Vertex source) const {
  check(source);
  std::vector<std::uint32_t> dist(vertex_count(), kUnreachable);
  std::vector<Vertex> queue{source};
  queue.reserve(vertex_count());
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    auto visit = [&](Vertex y) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    };
    if (x != root_) visit(parent_[x]);
    for (Vertex c : children(x)) visit(c);
  }
  return dist;
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(vertex_count() - 1);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (v != root_) out.push_back({v, parent_[v]});
  }
  return out;
}

}  // namespace uemb
