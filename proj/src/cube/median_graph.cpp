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

#include "uemb/cube/median_graph.hpp"

#include <algorithm>
#include <string>

namespace uemb {
namespace {

constexpr HyperplaneId kNoClass = kUnreachable;

// Marks every vertex reachable from start without using edges of class `id`.
std::size_t flood_fill(const Graph& g, const std::vector<HyperplaneId>& edge_class, HyperplaneId id, Vertex start,
                       std::vector<std::uint8_t>& mark, std::uint8_t label, std::vector<Vertex>& stack) {
  std::size_t count = 0;
  stack.clear();
  if (mark[start] != 0) return 0;
  mark[start] = label;
  stack.push_back(start);
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    ++count;
    for (const auto& inc : g.neighbors(x)) {
      if (edge_class[inc.edge] == id || mark[inc.to] != 0) continue;
      mark[inc.to] = label;
      stack.push_back(inc.to);
    }
  }
  return count;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<std::vector<bool>>& compat) : compat_(compat) {}

  unsigned run() {
    std::vector<unsigned> all(compat_.size());
    for (unsigned i = 0; i < all.size(); ++i) all[i] = i;
    expand(all, 0);
    return best_;
  }

 private:
  void expand(const std::vector<unsigned>& candidates, unsigned size) {
    if (candidates.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (size + (candidates.size() - i) <= best_) return;
      std::vector<unsigned> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (compat_[candidates[i]][candidates[j]]) next.push_back(candidates[j]);
      }
      expand(next, size + 1);
    }
  }

  const std::vector<std::vector<bool>>& compat_;
  unsigned best_ = 0;
};

}  // namespace

std::vector<Hyperplane> hyperplanes(const Graph& g, Vertex root) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<HyperplaneId> edge_class(m, kNoClass);
  std::vector<Hyperplane> result;
  std::vector<std::uint32_t> da, db;
  std::vector<Vertex> queue;
  std::vector<std::uint8_t> mark;

  for (EdgeId e = 0; e < m; ++e) {
    if (edge_class[e] != kNoClass) continue;
    const auto id = static_cast<HyperplaneId>(result.size());
    const auto [a, b] = g.edge(e);
    g.bfs(a, da, queue);
    g.bfs(b, db, queue);

    Hyperplane h;
    h.id = BasisKey{id};
    for (EdgeId f = 0; f < m; ++f) {
      const auto [c, d] = g.edge(f);
      if (da[c] + db[d] == da[d] + db[c]) continue;
      if (edge_class[f] != kNoClass) {
        throw SideComputationError("edge " + std::to_string(f) + " is related to edges of two different classes");
      }
      edge_class[f] = id;
      h.edge_class.push_back(f);
    }

    mark.assign(n, 0);
    const std::size_t near = flood_fill(g, edge_class, id, root, mark, 1, queue);
    const auto& first = g.edge(h.edge_class.front());
    const Vertex far_start = mark[first.u] == 1 ? first.v : first.u;
    const std::size_t far = flood_fill(g, edge_class, id, far_start, mark, 2, queue);
    if (near + far != n || far == 0) {
      throw SideComputationError("removing edge class " + std::to_string(id) +
                                 " does not leave exactly two components");
    }
    for (EdgeId f : h.edge_class) {
      const auto& ef = g.edge(f);
      if (mark[ef.u] == mark[ef.v]) {
        throw SideComputationError("edge " + std::to_string(f) + " of class " + std::to_string(id) +
                                   " has both endpoints on one side");
      }
    }
    h.near_side.resize(n);
    for (Vertex v = 0; v < n; ++v) h.near_side[v] = mark[v] == 1;
    result.push_back(std::move(h));
  }
  return result;
}

unsigned max_cube_dimension(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> stamp(n, 0);
  std::uint64_t token = 0;
  unsigned best = 0;
  for (Vertex x = 0; x < n; ++x) {
    const auto nbrs = g.neighbors(x);
    const std::size_t k = nbrs.size();
    if (k <= 1) {
      best = std::max(best, static_cast<unsigned>(k));
      continue;
    }
    std::vector<std::vector<bool>> compat(k, std::vector<bool>(k, false));
    bool any = false;
    for (std::size_t i = 0; i < k; ++i) {
      ++token;
      for (const auto& inc : g.neighbors(nbrs[i].to)) {
        if (inc.to != x) stamp[inc.to] = token;
      }
      for (std::size_t j = i + 1; j < k; ++j) {
        for (const auto& inc : g.neighbors(nbrs[j].to)) {
          if (stamp[inc.to] == token) {
            compat[i][j] = compat[j][i] = true;
            any = true;
            break;
          }
        }
      }
    }
    best = std::max(best, any ? CliqueSearch(compat).run() : 1u);
  }
  return best;
}

MedianGraph MedianGraph::build(Graph g, Vertex root) {
  if (g.vertex_count() == 0) throw std::invalid_argument("median graph needs at least one vertex");
  if (root >= g.vertex_count()) throw std::invalid_argument("root is out of range");
  if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
  if (!g.is_bipartite()) throw std::invalid_argument("graph is not bipartite");
  MedianGraph mg;
  mg.hyperplanes_ = uemb::hyperplanes(g, root);
  mg.edge_class_.assign(g.edge_count(), 0);
  for (const auto& h : mg.hyperplanes_) {
    for (EdgeId e : h.edge_class) mg.edge_class_[e] = h.id.value;
  }
  mg.dimension_ = max_cube_dimension(g);
  mg.graph_ = std::move(g);
  mg.root_ = root;
  return mg;
}

std::uint32_t MedianGraph::separating_count(Vertex u, Vertex v) const {
  std::uint32_t count = 0;
  for (const auto& h : hyperplanes_) count += separates(h, u, v) ? 1 : 0;
  return count;
}

std::optional<Vertex> MedianGraph::cross(Vertex v, HyperplaneId h) const {
  for (const auto& inc : graph_.neighbors(v)) {
    if (edge_class_[inc.edge] == h) return inc.to;
  }
  return std::nullopt;
}

MedianGraph MedianGraph::with_root(Vertex root) const {
  if (root >= vertex_count()) throw std::invalid_argument("root is out of range");
  MedianGraph mg = *this;
  mg.root_ = root;
  for (auto& h : mg.hyperplanes_) {
    if (!h.near_side[root]) h.near_side.flip();
  }
  return mg;
}

}  // namespace uemb
