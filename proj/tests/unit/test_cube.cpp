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
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "uemb/cube/embedding.hpp"
#include "uemb/cube/generators.hpp"
#include "uemb/cube/median_graph.hpp"
#include "uemb/cube/normal_cube_path.hpp"
#include "uemb/cube/validate.hpp"
#include "uemb/tree/embedding.hpp"
#include "uemb/tree/generators.hpp"

using namespace uemb;

namespace {

Graph cube3() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; ++v) {
    for (unsigned b = 0; b < 3; ++b) {
      if (!(v & (1u << b))) edges.push_back({v, v | (1u << b)});
    }
  }
  return Graph(8, edges);
}

std::vector<std::vector<std::uint32_t>> all_pairs(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.bfs(v));
  return d;
}

// Djokovic-Winkler classes by brute force over all edge pairs with union-find.
std::vector<std::size_t> brute_classes(const Graph& g) {
  const auto d = all_pairs(g);
  std::vector<std::size_t> parent(g.edge_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
      const auto [a, b] = g.edge(e);
      const auto [x, y] = g.edge(f);
      if (d[a][x] + d[b][y] != d[a][y] + d[b][x]) parent[find(e)] = find(f);
    }
  }
  std::vector<std::size_t> label(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) label[e] = find(e);
  return label;
}

// Same partition of edges, up to relabeling.
bool same_partition(const MedianGraph& g, const std::vector<std::size_t>& label) {
  std::map<std::size_t, HyperplaneId> seen;
  std::set<HyperplaneId> used;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [it, inserted] = seen.emplace(label[e], g.hyperplane_of(e));
    if (inserted && !used.insert(g.hyperplane_of(e)).second) return false;
    if (it->second != g.hyperplane_of(e)) return false;
  }
  return true;
}

// Opposite corner of the cube spanned by the root-ward edges at x, found from
// distances alone.
Vertex brute_opposite(const Graph& g, const std::vector<std::vector<std::uint32_t>>& d, Vertex root, Vertex x,
                      std::size_t* k_out) {
  std::vector<Vertex> down;
  for (const auto& inc : g.neighbors(x)) {
    if (d[root][inc.to] + 1 == d[root][x]) down.push_back(inc.to);
  }
  const auto k = static_cast<std::uint32_t>(down.size());
  *k_out = k;
  std::vector<Vertex> hits;
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    if (d[x][z] != k || d[root][z] + k != d[root][x]) continue;
    bool all = true;
    for (Vertex y : down) all = all && d[x][y] + d[y][z] == d[x][z];
    if (all) hits.push_back(z);
  }
  REQUIRE(hits.size() == 1);
  return hits.front();
}

std::vector<std::pair<std::string, CubeSpec>> small_complexes() {
  return {
      {"grid 4x3", GridSpec{{4, 3}}},
      {"grid 2x2x2", GridSpec{{2, 2, 2}}},
      {"staircase 6", staircase_columns(6)},
      {"staircase 5,5,2,1", StaircaseSpec{{5, 5, 2, 1}}},
      {"product spider x path", TreeProductSpec{SpiderSpec{3, 2}, PathSpec{3}}},
      {"product caterpillar x spider", TreeProductSpec{CaterpillarSpec{2, 1}, SpiderSpec{2, 2}}},
      {"tree", FromTreeSpec{BinarySampleSpec{6, 5, 3}}},
  };
}

}  // namespace

TEST_CASE("generator sizes") {
  const auto g = gen_cube(GridSpec{{2, 3}});
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 17);
  CHECK(g.hyperplane_count() == 5);
  CHECK(g.dimension() == 2);
  CHECK(gen_cube(GridSpec{{20, 20}}).hyperplane_count() == 40);
  CHECK(gen_cube(GridSpec{{2, 2, 2}}).dimension() == 3);
  CHECK(gen_cube(staircase_columns(20)).vertex_count() == 251);
  CHECK(gen_cube(FromTreeSpec{PathSpec{5}}).dimension() == 1);
  CHECK(declared_vertex_count(CubeSpec{GridSpec{{300, 300}}}) == 90601);
}

TEST_CASE("generator errors") {
  CHECK_THROWS_AS(gen_cube(GridSpec{{3}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_cube(GridSpec{{1, 1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_cube(GridSpec{{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_cube(StaircaseSpec{{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_cube(StaircaseSpec{{}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_cube(GridSpec{{100, 100}}, 1000), BudgetError);
  CHECK_THROWS_AS(gen_cube(GridSpec{{4'000'000'000u, 4'000'000'000u, 4'000'000'000u}}), BudgetError);
}

TEST_CASE("from_tree keeps the tree metric") {
  const auto t = gen_tree(PathSpec{5});
  const auto g = gen_cube(FromTreeSpec{PathSpec{5}});
  for (Vertex u = 0; u < t.vertex_count(); ++u) CHECK(g.distances_from(u) == t.distances_from(u));
  CHECK(g.hyperplane_count() == 5);
}

TEST_CASE("product of two paths is a grid") {
  const auto p = gen_cube_skeleton(TreeProductSpec{PathSpec{2}, PathSpec{2}});
  const auto q = gen_cube_skeleton(GridSpec{{2, 2}});
  auto edge_set = [](const Graph& g) {
    std::set<std::pair<Vertex, Vertex>> s;
    for (const auto& e : g.edges()) s.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    return s;
  };
  CHECK(edge_set(p.first) == edge_set(q.first));
  CHECK(p.second == q.second);
}

TEST_CASE("median validation") {
  const auto k3 = validate_median(Graph(3, {{0, 1}, {1, 2}, {2, 0}}), 1000);
  CHECK_FALSE(k3.valid);
  CHECK(k3.violation.has_value());
  CHECK(validate_median(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 1000).valid);
  const auto c = validate_median(cube3(), 1000);
  CHECK(c.valid);
  CHECK(c.triples_checked == 512);
  // K_{2,3}: the two left vertices and one right vertex have two medians.
  const Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK_FALSE(validate_median(k23, 1000).valid);
  CHECK_FALSE(validate_median(Graph(4, {{0, 1}, {2, 3}}), 1000).valid);
  // Sampled mode on a larger valid graph.
  const auto grid = gen_cube_skeleton(GridSpec{{30, 30}}).first;
  const auto sampled = validate_median(grid, 500, 3);
  CHECK(sampled.valid);
  CHECK(sampled.triples_checked == 500);
}

TEST_CASE("structural checks when building") {
  CHECK_THROWS(MedianGraph::build(Graph(3, {{0, 1}, {1, 2}, {2, 0}}), 0));
  CHECK_THROWS(MedianGraph::build(Graph(4, {{0, 1}, {2, 3}}), 0));
  // The six-cycle passes the structural checks; only the median validator catches it.
  const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK_NOTHROW(MedianGraph::build(c6, 0));
  CHECK_FALSE(validate_median(c6, 1000).valid);
}

TEST_CASE("hyperplanes match brute-force classes") {
  const auto path = gen_cube(FromTreeSpec{PathSpec{7}});
  CHECK(path.hyperplane_count() == 7);
  for (const auto& h : path.hyperplanes()) CHECK(h.edge_class.size() == 1);
  const auto c = MedianGraph::build(cube3(), 0);
  CHECK(c.hyperplane_count() == 3);
  for (const auto& h : c.hyperplanes()) CHECK(h.edge_class.size() == 4);
  CHECK(same_partition(c, brute_classes(c.graph())));
  for (const auto& [name, spec] : small_complexes()) {
    CAPTURE(name);
    const auto g = gen_cube(spec);
    CHECK(same_partition(g, brute_classes(g.graph())));
  }
  for (unsigned a = 1; a <= 4; ++a) {
    for (unsigned b = 1; b <= 4; ++b) CHECK(gen_cube(GridSpec{{a, b}}).hyperplane_count() == a + b);
  }
}

TEST_CASE("separation") {
  const auto g = gen_cube(GridSpec{{2, 3}});
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (const auto& h : g.hyperplanes()) CHECK_FALSE(separates(h, u, u));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.graph().edge(e);
    for (HyperplaneId h = 0; h < g.hyperplane_count(); ++h) {
      CHECK(separates(g.hyperplanes()[h], u, v) == (h == g.hyperplane_of(e)));
    }
  }
  const Vertex corner = 11;  // (2, 3)
  for (const auto& h : g.hyperplanes()) CHECK(separates(h, 0, corner));
  CHECK(g.separating_count(0, corner) == 5);
}

TEST_CASE("separating count equals graph distance") {
  for (const auto& [name, spec] : small_complexes()) {
    CAPTURE(name);
    const auto g = gen_cube(spec);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      const auto row = g.distances_from(u);
      for (Vertex v = 0; v < g.vertex_count(); ++v) REQUIRE(g.separating_count(u, v) == row[v]);
    }
  }
}

TEST_CASE("cross and re-rooting") {
  const auto g = gen_cube(staircase_columns(4));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.graph().edge(e);
    CHECK(g.cross(u, g.hyperplane_of(e)) == v);
    CHECK(g.cross(v, g.hyperplane_of(e)) == u);
  }
  for (Vertex r : {Vertex{3}, Vertex{7}}) {
    const auto a = g.with_root(r);
    const auto b = MedianGraph::build(g.graph(), r);
    CHECK(a.root() == r);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (HyperplaneId h = 0; h < g.hyperplane_count(); ++h) {
        REQUIRE(a.far_side(h, v) == separates(g.hyperplanes()[h], r, v));
      }
      std::uint32_t far_a = 0, far_b = 0;
      for (HyperplaneId h = 0; h < a.hyperplane_count(); ++h) far_a += a.far_side(h, v);
      for (HyperplaneId h = 0; h < b.hyperplane_count(); ++h) far_b += b.far_side(h, v);
      CHECK(far_a == far_b);
      CHECK(far_a == g.graph().bfs(r)[v]);
    }
    const auto ea = CubeEmbedder(a, WeightFunction::unit());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      CHECK(ea(v).norm_sq() == doctest::Approx(g.graph().bfs(r)[v]));
    }
  }
}

TEST_CASE("dimension") {
  CHECK(max_cube_dimension(cube3()) == 3);
  CHECK(MedianGraph::build(cube3(), 0).dimension() == 3);
  CHECK(gen_cube(FromTreeSpec{SpiderSpec{4, 3}}).dimension() == 1);
  CHECK(gen_cube(TreeProductSpec{SpiderSpec{3, 2}, PathSpec{3}}).dimension() == 2);
}

TEST_CASE("normal cube path examples") {
  const auto c = MedianGraph::build(cube3(), 0);
  const auto p = normal_cube_path(c, 7);
  REQUIRE(p.length() == 1);
  CHECK(p.steps()[0].crossed.size() == 3);
  CHECK(p.steps()[0].exit == 0);
  for (HyperplaneId h = 0; h < 3; ++h) CHECK(p.index(h) == 1);
  CHECK(normal_cube_path(c, 0).length() == 0);

  const auto tree = gen_tree(PathSpec{9});
  const auto tg = gen_cube(FromTreeSpec{PathSpec{9}});
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    const auto path = normal_cube_path(tg, v);
    REQUIRE(path.length() == tree.depth(v));
    const auto edges = tree.geodesic_edges(v);
    for (std::size_t i = 0; i < path.length(); ++i) {
      const auto& step = path.steps()[i];
      REQUIRE(step.crossed.size() == 1);
      const Vertex child = tree.depth(step.entry) > tree.depth(step.exit) ? step.entry : step.exit;
      CHECK(RootedTree::edge_key(child) == edges[i]);
      CHECK(path.index(step.crossed[0]) == i + 1);
    }
  }

  const auto grid = gen_cube(GridSpec{{2, 2}});
  const auto gp = normal_cube_path(grid, 8);
  REQUIRE(gp.length() == 2);
  CHECK(gp.steps()[0].crossed.size() == 2);
  CHECK(gp.steps()[1].crossed.size() == 2);
  CHECK(gp.steps()[0].exit == 4);
  CHECK_THROWS_AS(normal_cube_path(grid, 99), std::out_of_range);
}

TEST_CASE("normal cube steps match a distance-only oracle") {
  for (const auto& [name, spec] : small_complexes()) {
    CAPTURE(name);
    const auto g = gen_cube(spec);
    const auto d = all_pairs(g.graph());
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (x == g.root()) continue;
      std::size_t k = 0;
      const Vertex z = brute_opposite(g.graph(), d, g.root(), x, &k);
      const auto step = first_cube(g, x);
      CHECK(step.entry == x);
      CHECK(step.exit == z);
      CHECK(step.crossed.size() == k);
      CHECK(std::is_sorted(step.crossed.begin(), step.crossed.end()));
    }
  }
}

TEST_CASE("forest paths equal direct paths") {
  for (const auto& [name, spec] : small_complexes()) {
    CAPTURE(name);
    const auto g = gen_cube(spec);
    const NormalCubeForest forest(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto a = forest.path(v);
      const auto b = normal_cube_path(g, v);
      REQUIRE(a.length() == b.length());
      for (std::size_t i = 0; i < a.length(); ++i) {
        CHECK(a.steps()[i].entry == b.steps()[i].entry);
        CHECK(a.steps()[i].exit == b.steps()[i].exit);
        CHECK(a.steps()[i].crossed == b.steps()[i].crossed);
      }
      CHECK(std::equal(a.index_map().begin(), a.index_map().end(), b.index_map().begin(), b.index_map().end()));
    }
  }
}

TEST_CASE("index deviation along edges") {
  const auto tree = gen_cube(FromTreeSpec{SpiderSpec{3, 5}});
  for (const auto& e : tree.graph().edges()) CHECK(index_delta_check(tree, e.u, e.v) <= 1);
  // The edge at the root: its hyperplane is the only separator, so nothing is shared.
  const auto path = gen_cube(FromTreeSpec{PathSpec{4}});
  CHECK(index_delta_check(path, 0, 1) == 0);
  const auto grid = gen_cube(GridSpec{{10, 10}});
  std::uint32_t worst = 0;
  for (const auto& e : grid.graph().edges()) worst = std::max(worst, index_delta_check(grid, e.u, e.v));
  CHECK(grid.edge_count() == 220);
  CHECK(worst == 1);
}

TEST_CASE("cube embedding") {
  const auto g = gen_cube(GridSpec{{20, 20}});
  const auto unit = WeightFunction::unit();
  CHECK(cube_embed(g, WeightFunction::paper(18), g.root()).empty());
  const CubeEmbedder embed(g, unit);
  for (Vertex u = 0; u < g.vertex_count(); u += 13) {
    const auto row = g.distances_from(u);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      REQUIRE(vec_distance_sq(embed(u), embed(v)) == doctest::Approx(row[v]));
    }
  }
  const auto paper = WeightFunction::paper(16);
  const CubeEmbedder pe(g, paper);
  for (Vertex v = 0; v < g.vertex_count(); v += 7) {
    CHECK(pe(v) == cube_embed(g, paper, v));
    CHECK(pe(v) == cube_embed(normal_cube_path(g, v), paper));
    // Support lies on hyperplanes separating v from the root.
    const auto f = pe(v);
    for (auto k : f.keys()) CHECK(g.far_side(k.value, v));
  }
}

TEST_CASE("cube embedding of a tree matches the tree embedding") {
  const TreeSpec spec = SpiderSpec{3, 40};
  const auto t = gen_tree(spec);
  const auto g = gen_cube(FromTreeSpec{spec});
  const auto w = WeightFunction::paper(18);
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const auto c = cube_embed(g, w, v);
    const auto f = tree_embed(t, w, v);
    REQUIRE(c.support_size() == f.support_size());
    for (std::size_t i = 0; i < c.support_size(); ++i) {
      const Edge& e = g.graph().edge(g.hyperplanes()[c.keys()[i].value].edge_class.front());
      const Vertex child = t.depth(e.u) > t.depth(e.v) ? e.u : e.v;
      CHECK(f.at(RootedTree::edge_key(child)) == doctest::Approx(c.values()[i]).epsilon(1e-12));
    }
  }
}
