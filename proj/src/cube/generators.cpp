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

#include "uemb/cube/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace uemb {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

void check_budget(std::uint64_t declared, std::uint64_t budget) {
  if (declared > std::min<std::uint64_t>(budget, std::numeric_limits<Vertex>::max())) {
    throw BudgetError("complex would have " + std::to_string(declared) + " vertices, budget is " +
                      std::to_string(budget));
  }
}

std::pair<Graph, Vertex> make_grid(const GridSpec& s) {
  const std::size_t k = s.dims.size();
  std::vector<std::uint64_t> stride(k + 1, 1);
  for (std::size_t i = 0; i < k; ++i) stride[i + 1] = stride[i] * (s.dims[i] + 1ull);
  const std::uint64_t n = stride[k];
  std::vector<Edge> edges;
  std::vector<std::uint32_t> coord(k, 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) coord[i] = static_cast<std::uint32_t>((v / stride[i]) % (s.dims[i] + 1ull));
    for (std::size_t i = 0; i < k; ++i) {
      if (coord[i] < s.dims[i]) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + stride[i])});
    }
  }
  return {Graph(n, std::move(edges)), 0};
}

std::pair<Graph, Vertex> make_staircase(const StaircaseSpec& s) {
  const std::size_t k = s.heights.size();
  auto column_height = [&](std::size_t x) {
    std::uint32_t left = x > 0 ? s.heights[x - 1] : 0;
    std::uint32_t right = x < k ? s.heights[x] : 0;
    return std::max(left, right);
  };
  std::vector<std::uint64_t> base(k + 2, 0);
  for (std::size_t x = 0; x <= k; ++x) base[x + 1] = base[x] + column_height(x) + 1;
  auto id = [&](std::size_t x, std::uint32_t y) { return static_cast<Vertex>(base[x] + y); };
  std::vector<Edge> edges;
  for (std::size_t x = 0; x <= k; ++x) {
    for (std::uint32_t y = 0; y < column_height(x); ++y) edges.push_back({id(x, y), id(x, y + 1)});
    if (x < k) {
      for (std::uint32_t y = 0; y <= s.heights[x]; ++y) edges.push_back({id(x, y), id(x + 1, y)});
    }
  }
  return {Graph(base[k + 1], std::move(edges)), id(0, 0)};
}

std::pair<Graph, Vertex> make_tree_product(const TreeProductSpec& s, std::uint64_t budget) {
  const RootedTree a = gen_tree(s.left, budget);
  const RootedTree b = gen_tree(s.right, budget);
  const std::uint64_t na = a.vertex_count(), nb = b.vertex_count();
  check_budget(na * nb, budget);
  auto id = [&](std::uint64_t x, std::uint64_t y) { return static_cast<Vertex>(x + na * y); };
  const auto ea = a.edges(), eb = b.edges();
  std::vector<Edge> edges;
  edges.reserve(ea.size() * nb + eb.size() * na);
  for (std::uint64_t y = 0; y < nb; ++y) {
    for (const auto& e : ea) edges.push_back({id(e.u, y), id(e.v, y)});
  }
  for (std::uint64_t x = 0; x < na; ++x) {
    for (const auto& e : eb) edges.push_back({id(x, e.u), id(x, e.v)});
  }
  return {Graph(na * nb, std::move(edges)), id(a.root(), b.root())};
}

}  // namespace

StaircaseSpec staircase_columns(std::uint32_t columns) {
  StaircaseSpec s;
  for (std::uint32_t h = columns; h >= 1; --h) s.heights.push_back(h);
  return s;
}

std::uint64_t declared_vertex_count(const CubeSpec& spec) {
  return std::visit(Overloaded{
                        [](const FromTreeSpec& s) { return declared_vertex_count(s.tree); },
                        [](const GridSpec& s) {
                          std::uint64_t n = 1;
                          for (auto d : s.dims) n = saturating_mul(n, d + 1ull);
                          return n;
                        },
                        [](const StaircaseSpec& s) {
                          std::uint64_t n = s.heights.empty() ? 0 : s.heights.front() + 1ull;
                          for (auto h : s.heights) n += h + 1ull;
                          return n;
                        },
                        [](const TreeProductSpec& s) {
                          return saturating_mul(declared_vertex_count(s.left), declared_vertex_count(s.right));
                        },
                    },
                    spec);
}

std::pair<Graph, Vertex> gen_cube_skeleton(const CubeSpec& spec, std::uint64_t vertex_budget) {
  std::visit(Overloaded{
                 [](const FromTreeSpec&) {},
                 [](const GridSpec& s) {
                   if (s.dims.size() < 2 || s.dims.size() > 3) {
                     throw std::invalid_argument("grid needs 2 or 3 dimensions");
                   }
                   for (auto d : s.dims) {
                     if (d == 0) throw std::invalid_argument("grid dimensions must be positive");
                   }
                 },
                 [](const StaircaseSpec& s) {
                   if (s.heights.empty()) throw std::invalid_argument("staircase needs at least one column");
                   for (std::size_t i = 0; i < s.heights.size(); ++i) {
                     if (s.heights[i] == 0) throw std::invalid_argument("staircase heights must be positive");
                     if (i > 0 && s.heights[i] > s.heights[i - 1]) {
                       throw std::invalid_argument("staircase heights must be non-increasing");
                     }
                   }
                 },
                 [](const TreeProductSpec&) {},
             },
             spec);
  check_budget(declared_vertex_count(spec), vertex_budget);
  return std::visit(Overloaded{
                        [&](const FromTreeSpec& s) -> std::pair<Graph, Vertex> {
                          const RootedTree t = gen_tree(s.tree, vertex_budget);
                          return {t.to_graph(), t.root()};
                        },
                        [](const GridSpec& s) { return make_grid(s); },
                        [](const StaircaseSpec& s) { return make_staircase(s); },
                        [&](const TreeProductSpec& s) { return make_tree_product(s, vertex_budget); },
                    },
                    spec);
}

MedianGraph gen_cube(const CubeSpec& spec, std::uint64_t vertex_budget) {
  auto [graph, root] = gen_cube_skeleton(spec, vertex_budget);
  return MedianGraph::build(std::move(graph), root);
}

}  // namespace uemb
