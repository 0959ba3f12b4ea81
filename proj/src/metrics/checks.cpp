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

#include "uemb/metrics/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <vector>

#include "uemb/core/lemma.hpp"
#include "uemb/core/parallel.hpp"
#include "uemb/cube/embedding.hpp"
#include "uemb/cube/normal_cube_path.hpp"
#include "uemb/metrics/product.hpp"
#include "uemb/metrics/sampler.hpp"
#include "uemb/metrics/space.hpp"
#include "uemb/tree/embedding.hpp"
#include "uemb/tree/generators.hpp"

namespace uemb {
namespace {

// Per-worker tally merged at the end of a sweep.
struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  double margin = std::numeric_limits<double>::infinity();
  std::string first_violation;

  void record(double slack, const std::string& what = {}) {
    ++checked;
    margin = std::min(margin, slack);
    if (slack < 0.0) {
      if (violations++ == 0) first_violation = what;
    }
  }
};

class Tallies {
 public:
  Tallies() : per_worker_(worker_count()) {}
  Tally& operator[](unsigned worker) { return per_worker_[worker]; }

  CheckResult finish(std::string name) const {
    CheckResult r;
    r.name = std::move(name);
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& t : per_worker_) {
      r.checked += t.checked;
      r.violations += t.violations;
      margin = std::min(margin, t.margin);
      if (r.detail.empty() && !t.first_violation.empty()) r.detail = t.first_violation;
    }
    r.margin = r.checked == 0 ? 0.0 : margin;
    r.pass = r.violations == 0;
    return r;
  }

 private:
  std::vector<Tally> per_worker_;
};

std::string pair_text(Vertex u, Vertex v) {
  return "pair (" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

double uniform01(std::mt19937_64& engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

}  // namespace

CheckResult check_unit_oracle(const RootedTree& tree) {
  const auto unit = WeightFunction::unit();
  Tallies tallies;
  visit_pairs(metric_space(tree), [&](Vertex v) { return tree_embed(tree, unit, v); }, ExhaustiveSampler{},
              [&](unsigned worker, Vertex u, Vertex v, std::uint32_t d, double e2) {
                const double slack = kIdentityTolerance * d - std::abs(e2 - d);
                tallies[worker].record(slack, slack < 0.0 ? pair_text(u, v) : std::string());
              });
  return tallies.finish("unit-weight oracle (tree)");
}

CheckResult check_unit_oracle(const MedianGraph& g) {
  const CubeEmbedder embed(g, WeightFunction::unit());
  Tallies tallies;
  visit_pairs(metric_space(g), [&](Vertex v) { return embed(v); }, ExhaustiveSampler{},
              [&](unsigned worker, Vertex u, Vertex v, std::uint32_t d, double e2) {
                double slack = kIdentityTolerance * d - std::abs(e2 - d);
                if (g.separating_count(u, v) != d) slack = std::min(slack, -1.0);
                tallies[worker].record(slack, slack < 0.0 ? pair_text(u, v) : std::string());
              });
  return tallies.finish("unit-weight oracle (complex)");
}

CheckResult check_edge_dilatation(const RootedTree& tree, const WeightFunction& w) {
  const double bound = edge_sq_bound(w, 1);
  Tallies tallies;
  parallel_for(tree.vertex_count(), [&](std::size_t i, unsigned worker) {
    const auto v = static_cast<Vertex>(i);
    if (v == tree.root()) return;
    const double e2 = vec_distance_sq(tree_embed(tree, w, v), tree_embed(tree, w, tree.parent(v)));
    const double slack = bound * (1.0 + kIdentityTolerance) - e2;
    tallies[worker].record(slack, slack < 0.0 ? "edge " + pair_text(v, tree.parent(v)) : std::string());
  });
  auto r = tallies.finish("edge dilatation (tree)");
  r.detail = r.detail.empty() ? "bound " + std::to_string(bound) : r.detail;
  return r;
}

CheckResult check_edge_dilatation(const MedianGraph& g, const WeightFunction& w) {
  const double bound = edge_sq_bound(w, g.dimension());
  const CubeEmbedder embed(g, w);
  Tallies tallies;
  parallel_for(g.edge_count(), [&](std::size_t e, unsigned worker) {
    const auto& edge = g.graph().edge(static_cast<EdgeId>(e));
    const double e2 = vec_distance_sq(embed(edge.u), embed(edge.v));
    const double slack = bound * (1.0 + kIdentityTolerance) - e2;
    tallies[worker].record(slack, slack < 0.0 ? "edge " + pair_text(edge.u, edge.v) : std::string());
  });
  auto r = tallies.finish("edge dilatation (complex)");
  r.detail = r.detail.empty() ? "bound " + std::to_string(bound) : r.detail;
  return r;
}

CheckResult check_tree_compression(const RootedTree& tree, const WeightFunction& w) {
  const auto prefix = sq_prefix_table(w, tree.height());
  Tallies tallies;
  visit_pairs(metric_space(tree), [&](Vertex v) { return tree_embed(tree, w, v); }, ExhaustiveSampler{},
              [&](unsigned worker, Vertex u, Vertex v, std::uint32_t d, double e2) {
                // Longer branch below the meeting point: (d + |depth u - depth v|) / 2.
                const std::uint32_t du = tree.depth(u), dv = tree.depth(v);
                const std::uint32_t s = (d + (du > dv ? du - dv : dv - du)) / 2;
                const double bound = prefix[s];
                const double slack = e2 - bound * (1.0 - kRoundingSlack);
                tallies[worker].record(slack, slack < 0.0 ? pair_text(u, v) : std::string());
              });
  return tallies.finish("per-pair compression (tree)");
}

CheckResult check_cube_compression(const MedianGraph& g, const WeightFunction& w) {
  const unsigned n = std::max(g.dimension(), 1u);
  const auto prefix = sq_prefix_table(w, g.hyperplane_count() / (2 * n) + 1);
  const CubeEmbedder embed(g, w);
  Tallies tallies;
  visit_pairs(metric_space(g), [&](Vertex v) { return embed(v); }, ExhaustiveSampler{},
              [&](unsigned worker, Vertex u, Vertex v, std::uint32_t d, double e2) {
                const double bound = prefix[d / (2 * n)];
                const double slack = e2 - bound * (1.0 - kRoundingSlack);
                tallies[worker].record(slack, slack < 0.0 ? pair_text(u, v) : std::string());
              });
  return tallies.finish("per-pair compression (complex)");
}

CheckResult check_normal_paths(const MedianGraph& g) {
  const NormalCubeForest forest(g);
  const unsigned n = g.dimension();
  const bool full_diagonal = g.vertex_count() * g.hyperplane_count() <= 20'000'000;

  std::vector<std::uint32_t> far_count(g.vertex_count(), 0);
  parallel_for(g.vertex_count(), [&](std::size_t v, unsigned) {
    for (HyperplaneId h = 0; h < g.hyperplane_count(); ++h) far_count[v] += g.far_side(h, static_cast<Vertex>(v));
  });

  Tallies tallies;
  std::vector<std::uint32_t> max_step(worker_count(), 0);
  std::vector<std::uint32_t> max_delta(worker_count(), 0);
  parallel_for(g.vertex_count(), [&](std::size_t i, unsigned worker) {
    const auto v = static_cast<Vertex>(i);
    const auto path = forest.path(v);
    bool ok = path.index_map().size() == far_count[v];
    for (const auto& [h, idx] : path.index_map()) ok = ok && g.far_side(h, v) && idx >= 1;
    for (const auto& step : path.steps()) {
      max_step[worker] = std::max<std::uint32_t>(max_step[worker], static_cast<std::uint32_t>(step.crossed.size()));
      ok = ok && step.crossed.size() <= n;
      ok = ok && far_count[step.exit] + step.crossed.size() == far_count[step.entry];
      for (HyperplaneId h : step.crossed) ok = ok && g.far_side(h, step.entry) && !g.far_side(h, step.exit);
      if (full_diagonal) ok = ok && g.separating_count(step.entry, step.exit) == step.crossed.size();
    }
    tallies[worker].record(ok ? 0.0 : -1.0, ok ? std::string() : "path from vertex " + std::to_string(v));
  });
  parallel_for(g.edge_count(), [&](std::size_t e, unsigned worker) {
    const auto& edge = g.graph().edge(static_cast<EdgeId>(e));
    const auto pu = forest.path(edge.u), pv = forest.path(edge.v);
    const std::uint32_t delta = index_delta_check(pu, pv);
    max_delta[worker] = std::max(max_delta[worker], delta);
    const HyperplaneId own = g.hyperplane_of(static_cast<EdgeId>(e));
    const auto a = pu.index(own), b = pv.index(own);
    const bool own_ok = std::min(a, b) == 0 && std::max(a, b) == 1;
    const double slack = own_ok ? 1.0 - static_cast<double>(delta) : -1.0;
    tallies[worker].record(slack, slack < 0.0 ? "edge " + pair_text(edge.u, edge.v) : std::string());
  });
  auto r = tallies.finish("normal cube paths");
  std::ostringstream detail;
  detail << "dimension " << n << ", largest cube step " << *std::max_element(max_step.begin(), max_step.end())
         << ", max index deviation " << *std::max_element(max_delta.begin(), max_delta.end()) << " over "
         << g.edge_count() << " edges"
         << (full_diagonal ? "" : ", diagonal steps checked by side counts");
  if (!r.detail.empty()) detail << ", first violation at " << r.detail;
  r.detail = detail.str();
  return r;
}

CheckResult check_product_identities(std::uint64_t seed, std::uint64_t count) {
  std::mt19937_64 engine(seed);
  const RootedTree left = gen_tree(PathSpec{60});
  const RootedTree right = gen_tree(SpiderSpec{3, 30});
  const auto w = WeightFunction::paper(kMinPaperCutoff);
  const ProductEmbedding product({
      {left.vertex_count(), tree_key_span(left), [&](Vertex v) { return tree_embed(left, w, v); }},
      {right.vertex_count(), tree_key_span(right), [&](Vertex v) { return tree_embed(right, w, v); }},
  });

  Tally tally;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::size_t k = 1 + engine() % 5;
    std::vector<double> d(k);
    for (auto& x : d) x = 100.0 * uniform01(engine);
    const auto [l1, l2] = l1_l2_compare(d);
    const double slack_lo = l1 - l2 * (1.0 - kIdentityTolerance);
    const double slack_hi = std::sqrt(static_cast<double>(k)) * l2 * (1.0 + kIdentityTolerance) - l1;
    tally.record(std::min(slack_lo, slack_hi), "tuple " + std::to_string(i));

    const Vertex x = static_cast<Vertex>(engine() % product.vertex_count());
    const Vertex y = static_cast<Vertex>(engine() % product.vertex_count());
    const auto cx = product.coordinates(x), cy = product.coordinates(y);
    const double lhs = vec_distance_sq(product(x), product(y));
    const double rhs = vec_distance_sq(tree_embed(left, w, cx[0]), tree_embed(left, w, cy[0])) +
                       vec_distance_sq(tree_embed(right, w, cx[1]), tree_embed(right, w, cy[1]));
    tally.record(kIdentityTolerance * std::max(rhs, 1.0) - std::abs(lhs - rhs), pair_text(x, y));
  }
  CheckResult r;
  r.name = "product identities";
  r.checked = tally.checked;
  r.violations = tally.violations;
  r.margin = tally.margin;
  r.pass = tally.violations == 0;
  r.detail = r.pass ? "" : "first violation at " + tally.first_violation;
  return r;
}

}  // namespace uemb
