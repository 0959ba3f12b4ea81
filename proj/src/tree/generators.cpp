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

#include "uemb/tree/generators.hpp"

#include <array>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace uemb {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_positive(std::uint64_t value, const char* name) {
  if (value == 0) throw std::invalid_argument(std::string(name) + " must be positive");
}

RootedTree make_path(const PathSpec& s) {
  std::vector<Vertex> parent(s.length + 1ull);
  for (Vertex v = 0; v < parent.size(); ++v) parent[v] = v == 0 ? 0 : v - 1;
  return RootedTree::from_parents(std::move(parent));
}

RootedTree make_spider(const SpiderSpec& s) {
  std::vector<Vertex> parent(1ull + std::uint64_t{s.legs} * s.leg_length);
  parent[0] = 0;
  Vertex next = 1;
  for (std::uint32_t leg = 0; leg < s.legs; ++leg) {
    Vertex prev = 0;
    for (std::uint32_t i = 0; i < s.leg_length; ++i, ++next) {
      parent[next] = prev;
      prev = next;
    }
  }
  return RootedTree::from_parents(std::move(parent));
}

RootedTree make_caterpillar(const CaterpillarSpec& s) {
  const std::uint64_t spine_vertices = s.spine + 1ull;
  std::vector<Vertex> parent(spine_vertices * (s.hair + 1ull));
  for (Vertex v = 0; v < spine_vertices; ++v) parent[v] = v == 0 ? 0 : v - 1;
  auto next = static_cast<Vertex>(spine_vertices);
  for (Vertex base = 0; base < spine_vertices; ++base) {
    Vertex prev = base;
    for (std::uint32_t i = 0; i < s.hair; ++i, ++next) {
      parent[next] = prev;
      prev = next;
    }
  }
  return RootedTree::from_parents(std::move(parent));
}

RootedTree make_binary_sample(const BinarySampleSpec& s) {
  // Directions come straight from the engine's bits so the sample does not
  // depend on the standard library's distribution implementations.
  std::mt19937_64 engine(s.seed);
  std::vector<Vertex> parent{0};
  std::vector<std::array<Vertex, 2>> child{{0, 0}};  // 0 marks "absent"; the root is never a child
  for (std::uint32_t r = 0; r < s.rays; ++r) {
    Vertex x = 0;
    std::uint64_t bits = 0;
    for (std::uint32_t level = 0; level < s.depth; ++level) {
      if (level % 64 == 0) bits = engine();
      const unsigned dir = (bits >> (level % 64)) & 1u;
      if (child[x][dir] == 0) {
        const auto fresh = static_cast<Vertex>(parent.size());
        parent.push_back(x);
        child.push_back({0, 0});
        child[x][dir] = fresh;
      }
      x = child[x][dir];
    }
  }
  return RootedTree::from_parents(std::move(parent));
}

}  // namespace

std::uint64_t declared_vertex_count(const TreeSpec& spec) {
  return std::visit(Overloaded{
                        [](const PathSpec& s) -> std::uint64_t { return s.length + 1ull; },
                        [](const SpiderSpec& s) -> std::uint64_t { return 1ull + std::uint64_t{s.legs} * s.leg_length; },
                        [](const BinarySampleSpec& s) -> std::uint64_t {
                          return 1ull + std::uint64_t{s.rays} * s.depth;
                        },
                        [](const CaterpillarSpec& s) -> std::uint64_t {
                          return (s.spine + 1ull) * (s.hair + 1ull);
                        },
                    },
                    spec);
}

RootedTree gen_tree(const TreeSpec& spec, std::uint64_t vertex_budget) {
  std::visit(Overloaded{
                 [](const PathSpec& s) { require_positive(s.length, "path length"); },
                 [](const SpiderSpec& s) {
                   require_positive(s.legs, "spider legs");
                   require_positive(s.leg_length, "spider leg length");
                 },
                 [](const BinarySampleSpec& s) {
                   require_positive(s.depth, "binary sample depth");
                   require_positive(s.rays, "binary sample rays");
                   if (s.depth < 64 && s.rays > (1ull << s.depth)) {
                     throw std::invalid_argument("binary sample needs rays <= 2^depth");
                   }
                 },
                 [](const CaterpillarSpec& s) {
                   require_positive(s.spine, "caterpillar spine");
                   require_positive(s.hair, "caterpillar hair");
                 },
             },
             spec);
  const std::uint64_t declared = declared_vertex_count(spec);
  // Vertex ids are 32-bit whatever the caller's budget.
  vertex_budget = std::min<std::uint64_t>(vertex_budget, std::numeric_limits<Vertex>::max());
  if (declared > vertex_budget) {
    throw BudgetError("tree would have " + std::to_string(declared) + " vertices, budget is " +
                      std::to_string(vertex_budget));
  }
  return std::visit(Overloaded{
                        [](const PathSpec& s) { return make_path(s); },
                        [](const SpiderSpec& s) { return make_spider(s); },
                        [](const BinarySampleSpec& s) { return make_binary_sample(s); },
                        [](const CaterpillarSpec& s) { return make_caterpillar(s); },
                    },
                    spec);
}

}  // namespace uemb
