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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "uemb/core/lemma.hpp"
#include "uemb/tree/embedding.hpp"
#include "uemb/tree/generators.hpp"
#include "uemb/tree/rooted_tree.hpp"

using namespace uemb;

namespace {

// Ancestor chain from v up to the root, v first.
std::vector<Vertex> chain(const RootedTree& t, Vertex v) {
  std::vector<Vertex> out{v};
  while (v != t.root()) out.push_back(v = t.parent(v));
  return out;
}

// Brute-force meeting point: first vertex on U's chain that is also on V's.
Vertex brute_meeting(const RootedTree& t, Vertex u, Vertex v) {
  const auto cv = chain(t, v);
  const std::set<Vertex> on_v(cv.begin(), cv.end());
  for (Vertex x : chain(t, u)) {
    if (on_v.count(x)) return x;
  }
  return t.root();
}

std::uint32_t diameter(const RootedTree& t) {
  const auto d0 = t.distances_from(t.root());
  const auto far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  const auto d1 = t.distances_from(far);
  return *std::max_element(d1.begin(), d1.end());
}

RootedTree random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> parent(n);
  parent[0] = 0;
  for (Vertex v = 1; v < n; ++v) parent[v] = static_cast<Vertex>(rng() % v);
  return RootedTree::from_parents(parent);
}

}  // namespace

TEST_CASE("generator shapes") {
  const auto path = gen_tree(PathSpec{5});
  CHECK(path.vertex_count() == 6);
  CHECK(diameter(path) == 5);
  const auto spider = gen_tree(SpiderSpec{3, 100});
  CHECK(spider.vertex_count() == 301);
  CHECK(diameter(spider) == 200);
  CHECK(spider.children(spider.root()).size() == 3);
  const auto cat = gen_tree(CaterpillarSpec{10, 3});
  CHECK(cat.vertex_count() == 44);
  CHECK(cat.height() == 13);
}

TEST_CASE("binary sample") {
  const auto a = gen_tree(BinarySampleSpec{200, 50, 42});
  const auto b = gen_tree(BinarySampleSpec{200, 50, 42});
  CHECK(a.vertex_count() <= 10001);
  CHECK(a.parents() == b.parents());
  CHECK(a.height() == 200);
  for (Vertex v = 0; v < a.vertex_count(); ++v) CHECK(a.children(v).size() <= 2);
  const auto c = gen_tree(BinarySampleSpec{200, 50, 43});
  CHECK(c.parents() != a.parents());
  // Leaves are exactly the ray ends, all at full depth (rays are distinct leaves).
  std::size_t leaves = 0;
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    if (a.children(v).empty()) {
      ++leaves;
      CHECK(a.depth(v) == 200);
    }
  }
  CHECK(leaves == 50);
}

TEST_CASE("generator errors") {
  CHECK_THROWS_AS(gen_tree(PathSpec{0}), std::invalid_argument);
  CHECK_THROWS_AS(gen_tree(SpiderSpec{0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(gen_tree(BinarySampleSpec{3, 9, 1}), std::invalid_argument);
  CHECK_NOTHROW(gen_tree(BinarySampleSpec{3, 8, 1}));
  CHECK_THROWS_AS(gen_tree(PathSpec{100}, 50), BudgetError);
  CHECK_THROWS_AS(gen_tree(BinarySampleSpec{100000, 100000, 1}), BudgetError);
}

TEST_CASE("from_parents validation") {
  CHECK_THROWS_AS(RootedTree::from_parents({}), std::invalid_argument);
  CHECK_THROWS_AS(RootedTree::from_parents({0, 1}), std::invalid_argument);     // two roots
  CHECK_THROWS_AS(RootedTree::from_parents({1, 2, 1}), std::invalid_argument);  // no root
  CHECK_THROWS_AS(RootedTree::from_parents({0, 2, 1}), std::invalid_argument);  // cycle
  CHECK_THROWS_AS(RootedTree::from_parents({0, 5}), std::invalid_argument);
  const auto t = RootedTree::from_edges(4, {{2, 0}, {1, 2}, {3, 2}}, 2);
  CHECK(t.root() == 2);
  CHECK(t.parent(0) == 2);
  CHECK(t.depth(1) == 1);
  CHECK_THROWS_AS(RootedTree::from_edges(4, {{2, 0}, {1, 2}}, 2), std::invalid_argument);
}

TEST_CASE("geodesic edges") {
  const auto path = gen_tree(PathSpec{5});
  CHECK(path.geodesic_edges(path.root()).empty());
  Vertex far = 0;
  for (Vertex v = 0; v < path.vertex_count(); ++v) {
    if (path.depth(v) == 5) far = v;
  }
  const auto g = path.geodesic_edges(far);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == RootedTree::edge_key(far));
  CHECK_THROWS_AS(path.geodesic_edges(99), std::out_of_range);
}

TEST_CASE("meeting point and distance against brute force") {
  const auto spider = gen_tree(SpiderSpec{3, 4});
  const auto kids = spider.children(spider.root());
  CHECK(spider.meeting_point(kids[0], kids[1]) == spider.root());
  for (const auto& t : {random_tree(60, 1), random_tree(60, 2), gen_tree(BinarySampleSpec{8, 12, 3})}) {
    for (Vertex u = 0; u < t.vertex_count(); ++u) {
      const auto row = t.distances_from(u);
      CHECK(t.meeting_point(u, u) == u);
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        const Vertex s = brute_meeting(t, u, v);
        REQUIRE(t.meeting_point(u, v) == s);
        REQUIRE(t.distance(u, v) == row[v]);
        REQUIRE(row[v] == t.depth(u) + t.depth(v) - 2 * t.depth(s));
      }
    }
  }
  // Ancestor case.
  const auto path = gen_tree(PathSpec{6});
  for (Vertex v = 0; v < path.vertex_count(); ++v) {
    for (Vertex a : chain(path, v)) CHECK(path.meeting_point(a, v) == a);
  }
}

TEST_CASE("tree_embed examples") {
  const auto path = gen_tree(PathSpec{30});
  const auto paper = WeightFunction::paper(18);
  CHECK(tree_embed(path, paper, path.root()).empty());
  for (Vertex v = 0; v < path.vertex_count(); ++v) {
    if (path.depth(v) != 20) continue;
    const double x18 = paper(18.0), x19 = paper(19.0), x20 = paper(20.0);
    CHECK(tree_embed(path, paper, v).norm_sq() == doctest::Approx(x18 * x18 + x19 * x19 + x20 * x20));
  }
  // Shallow vertices collapse under truncation.
  for (Vertex v = 0; v < path.vertex_count(); ++v) {
    if (path.depth(v) < 18) CHECK(tree_embed(path, paper, v).empty());
  }
}

TEST_CASE("unit weight reproduces the square root of the tree metric") {
  const auto unit = WeightFunction::unit();
  for (const auto& t : {gen_tree(PathSpec{30}), random_tree(80, 9)}) {
    for (Vertex u = 0; u < t.vertex_count(); ++u) {
      CHECK(tree_embed(t, unit, u).norm_sq() == doctest::Approx(t.depth(u)));
      const auto row = t.distances_from(u);
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        REQUIRE(vec_distance_sq(tree_embed(t, unit, u), tree_embed(t, unit, v)) == doctest::Approx(row[v]));
      }
    }
  }
}

TEST_CASE("coordinates are indexed by position along the root path") {
  const auto t = random_tree(50, 4);
  const auto w = WeightFunction::paper(16);
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const auto f = tree_embed(t, w, v);
    const auto edges = t.geodesic_edges(v);
    for (std::size_t i = 0; i < edges.size(); ++i) CHECK(f.at(edges[i]) == w(i + 1.0));
  }
}

TEST_CASE("injectivity patch") {
  const auto t = gen_tree(SpiderSpec{3, 10});
  const auto w = WeightFunction::paper(18);
  const TreeEmbeddingOptions opts{0.25};
  CHECK(tree_key_span(t) == t.vertex_count());
  CHECK(tree_key_span(t, opts) == 2 * t.vertex_count());
  for (Vertex u = 0; u < t.vertex_count(); ++u) {
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      const double plain = vec_distance_sq(tree_embed(t, w, u), tree_embed(t, w, v));
      const double patched = vec_distance_sq(tree_embed(t, w, u, opts), tree_embed(t, w, v, opts));
      CHECK(patched == doctest::Approx(plain + 0.0625 * t.distance(u, v)));
      if (u != v) CHECK(patched > 0.0);
    }
  }
}

TEST_CASE("per-pair tree inequalities on random trees") {
  const auto w = WeightFunction::paper(16);
  const double edge_bound = edge_sq_bound(w, 1);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    // Deep random trees: parents drawn from a sliding window.
    std::mt19937_64 rng(seed);
    std::vector<Vertex> parent(400);
    for (Vertex v = 1; v < parent.size(); ++v) parent[v] = v - 1 - static_cast<Vertex>(rng() % std::min<Vertex>(v, 3));
    const auto t = RootedTree::from_parents(parent);
    const auto prefix = sq_prefix_table(w, t.height());
    for (Vertex u = 0; u < t.vertex_count(); ++u) {
      if (u != t.root()) CHECK(vec_distance_sq(tree_embed(t, w, u), tree_embed(t, w, t.parent(u))) <= edge_bound);
      for (Vertex v = u + 1; v < t.vertex_count(); v += 7) {
        const Vertex s = t.meeting_point(u, v);
        const std::uint32_t branch = std::max(t.depth(u), t.depth(v)) - t.depth(s);
        REQUIRE(vec_distance_sq(tree_embed(t, w, u), tree_embed(t, w, v)) >= prefix[branch] * (1 - 1e-12));
      }
    }
  }
}
