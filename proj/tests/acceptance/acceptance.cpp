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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "uemb/core/lemma.hpp"
#include "uemb/cube/embedding.hpp"
#include "uemb/cube/generators.hpp"
#include "uemb/metrics/bounds.hpp"
#include "uemb/metrics/bourgain.hpp"
#include "uemb/metrics/checks.hpp"
#include "uemb/metrics/profile.hpp"
#include "uemb/tree/embedding.hpp"
#include "uemb/tree/generators.hpp"

using namespace uemb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

const WeightFunction kPaper = WeightFunction::paper(18);
constexpr std::uint64_t kNMax = 1'000'000;

// Fold several sweeps into one outcome.
void absorb(Outcome& o, const CheckResult& r, const std::string& label) {
  o.pass = o.pass && r.pass;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += label + " " + std::to_string(r.checked) + " checked, " + std::to_string(r.violations) + " violations";
  if (!r.pass && !r.detail.empty()) o.detail += " (" + r.detail + ")";
}

std::vector<std::pair<std::string, TreeSpec>> criterion_trees() {
  return {
      {"path(1000)", PathSpec{1000}},
      {"spider(5,200)", SpiderSpec{5, 200}},
      {"binary_sample(200,50,42)", BinarySampleSpec{200, 50, 42}},
      {"spider(4,500)", SpiderSpec{4, 500}},
      {"binary_sample(300,40,7)", BinarySampleSpec{300, 40, 7}},
      {"binary_sample(100,60,42)", BinarySampleSpec{100, 60, 42}},
      {"binary_sample(200,60,42)", BinarySampleSpec{200, 60, 42}},
      {"spider(3,40)", SpiderSpec{3, 40}},
  };
}

std::vector<std::pair<std::string, CubeSpec>> criterion_complexes() {
  return {
      {"grid(20x20)", GridSpec{{20, 20}}},
      {"staircase(20)", staircase_columns(20)},
      {"tree_product(path(15),path(15))", TreeProductSpec{PathSpec{15}, PathSpec{15}}},
      {"grid(300x300)", GridSpec{{300, 300}}},
      {"grid(10x10)", GridSpec{{10, 10}}},
      {"staircase(10)", staircase_columns(10)},
      {"tree_product(path(8),path(8))", TreeProductSpec{PathSpec{8}, PathSpec{8}}},
      {"from_tree(spider(3,40))", FromTreeSpec{SpiderSpec{3, 40}}},
  };
}

Outcome unit_oracle_trees() {
  Outcome o;
  for (const auto& [name, spec] : criterion_trees()) {
    if (name != "path(1000)" && name != "spider(5,200)" && name != "binary_sample(200,50,42)") continue;
    absorb(o, check_unit_oracle(gen_tree(spec)), name);
  }
  return o;
}

Outcome unit_oracle_complexes() {
  Outcome o;
  for (const auto& [name, spec] : criterion_complexes()) {
    if (name != "grid(20x20)" && name != "staircase(20)" && name != "tree_product(path(15),path(15))") continue;
    absorb(o, check_unit_oracle(gen_cube(spec)), name);
  }
  return o;
}

Outcome lemma_first_part() {
  const LemmaReport r = verify_lemma(kPaper, kNMax);
  Outcome o;
  const double bound = 1.0 / std::log(std::log(18.0));
  o.pass = r.partial_sums_monotone && r.tail_sum <= bound + 1e-6 && r.partial_sums.size() == 4;
  o.detail = "diff_sq_sum at 1e3..1e6:";
  for (const auto& [n, s] : r.partial_sums) o.detail += " " + num(s);
  o.detail += "; tail " + num(r.tail_sum) + " <= " + num(bound);
  return o;
}

Outcome lemma_second_part() {
  const Lemma2Constant c = lemma2_constant(kPaper, kNMax);
  const Lemma2Constant c_tenth = lemma2_constant(kPaper, kNMax / 10);
  // Independent pass over every N with the returned constant.
  std::uint64_t violations = 0;
  const auto prefix = sq_prefix_table(kPaper, kNMax);
  for (std::uint64_t n = 1; n <= kNMax; ++n) {
    const double x = kPaper(static_cast<double>(n));
    if (prefix[n] < 0.5 * static_cast<double>(n) * x * x - c.value) ++violations;
  }
  Outcome o;
  o.pass = c.argmax >= 1 && c.argmax < kNMax && violations == 0 && c.value == c_tenth.value &&
           c.argmax == c_tenth.argmax;
  o.detail = "C = " + num(c.value) + " at N = " + std::to_string(c.argmax) + " (N_max 1e5: " + num(c_tenth.value) +
             " at N = " + std::to_string(c_tenth.argmax) + "), " + std::to_string(violations) + " violations";
  return o;
}

Outcome edge_dilatation() {
  Outcome o;
  for (const auto& [name, spec] : criterion_trees()) absorb(o, check_edge_dilatation(gen_tree(spec), kPaper), name);
  for (const auto& [name, spec] : criterion_complexes()) {
    const MedianGraph g = gen_cube(spec);
    absorb(o, check_edge_dilatation(g, kPaper), name + " n=" + std::to_string(g.dimension()));
  }
  return o;
}

Outcome tree_compression() {
  Outcome o;
  for (const auto& [name, spec] : criterion_trees()) {
    if (name != "spider(4,500)" && name != "binary_sample(300,40,7)") continue;
    absorb(o, check_tree_compression(gen_tree(spec), kPaper), name);
  }
  return o;
}

Outcome complex_compression() {
  const MedianGraph g = gen_cube(GridSpec{{300, 300}});
  const CubeEmbedder embed(g, kPaper);
  const CompressionProfile p =
      profile(metric_space(g), [&](Vertex v) { return embed(v); }, StratifiedSampler{1000, 11}, kPaper.describe());
  const double c = lemma2_constant(kPaper, kNMax).value;
  const unsigned n = g.dimension();
  std::uint64_t rows = 0, violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& e : p.entries) {
    if (e.t < 36) continue;
    ++rows;
    const std::uint32_t k = e.t / (2 * n);
    const double xk = kPaper(static_cast<double>(k));
    const double slack = e.rho_hat * e.rho_hat - (0.5 * k * xk * xk - c);
    worst = std::min(worst, slack);
    if (slack < 0.0) ++violations;
  }
  Outcome o;
  o.pass = n == 2 && rows > 0 && violations == 0;
  o.detail = "n = " + std::to_string(n) + ", " + std::to_string(rows) + " rows with t >= 36 up to t = " +
             std::to_string(p.entries.back().t) + ", " + std::to_string(violations) +
             " violations, min slack in rho^2 " + num(worst);
  return o;
}

Outcome key_property() {
  Outcome o;
  for (const auto& [name, spec] : criterion_complexes()) {
    if (name != "grid(10x10)" && name != "staircase(10)" && name != "tree_product(path(8),path(8))") continue;
    const CheckResult r = check_normal_paths(gen_cube(spec));
    absorb(o, r, name);
    o.detail += " [" + r.detail + "]";
  }
  return o;
}

Outcome cross_module() {
  const TreeSpec spec = SpiderSpec{3, 40};
  const RootedTree tree = gen_tree(spec);
  const MedianGraph g = gen_cube(FromTreeSpec{spec});
  // Shared key assignment: a hyperplane of a tree is one edge, keyed by its child endpoint.
  std::vector<std::uint32_t> key_of(g.hyperplane_count());
  for (HyperplaneId h = 0; h < g.hyperplane_count(); ++h) {
    const Edge& e = g.graph().edge(g.hyperplanes()[h].edge_class.front());
    key_of[h] = tree.depth(e.u) > tree.depth(e.v) ? e.u : e.v;
  }
  const CubeEmbedder embed(g, kPaper);
  std::uint64_t mismatches = 0;
  double worst = 0.0;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    const SparseVector a = tree_embed(tree, kPaper, v);
    const SparseVector cube = embed(v);
    std::vector<std::pair<BasisKey, double>> remapped;
    for (std::size_t i = 0; i < cube.support_size(); ++i) {
      remapped.emplace_back(BasisKey{key_of[cube.keys()[i].value]}, cube.values()[i]);
    }
    const SparseVector b = SparseVector::from_entries(std::move(remapped));
    bool same = a.support_size() == b.support_size();
    for (std::size_t i = 0; same && i < a.support_size(); ++i) {
      same = a.keys()[i] == b.keys()[i];
      worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
    }
    if (!same || worst > 1e-12) ++mismatches;
  }
  Outcome o;
  o.pass = mismatches == 0 && g.vertex_count() == tree.vertex_count() && g.root() == tree.root();
  o.detail = std::to_string(tree.vertex_count()) + " vertices, " + std::to_string(mismatches) +
             " mismatches, max coordinate difference " + num(worst);
  return o;
}

Outcome bourgain() {
  std::vector<CompressionProfile> profiles;
  std::vector<RootedTree> trees;
  for (const TreeSpec spec : {TreeSpec{BinarySampleSpec{100, 60, 42}}, TreeSpec{BinarySampleSpec{200, 60, 42}}}) {
    trees.push_back(gen_tree(spec));
    const RootedTree& tree = trees.back();
    profiles.push_back(
        profile(metric_space(tree), [&](Vertex v) { return tree_embed(tree, kPaper, v); }, ExhaustiveSampler{}));
  }
  const BourgainVerdict v = bourgain_consistency(profiles, 2);
  Outcome o;
  o.pass = v.c_ratio <= 2.0;
  o.detail = "c = " + num(v.fits[0].c) + " (t = " + std::to_string(v.fits[0].t_at_max) + "), " + num(v.fits[1].c) +
             " (t = " + std::to_string(v.fits[1].t_at_max) + "), ratio " + num(v.c_ratio) + "; tail slopes " +
             num(v.fits[0].tail_slope) + ", " + num(v.fits[1].tail_slope);
  return o;
}

Outcome product_identities() {
  Outcome o;
  const CheckResult r = check_product_identities(2026, 10'000);
  absorb(o, r, "10000 tuples and pairs:");
  o.detail += ", margin " + num(r.margin);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"unit-weight oracle on trees", unit_oracle_trees},
      {"unit-weight oracle on complexes", unit_oracle_complexes},
      {"difference-square tail bound", lemma_first_part},
      {"square-sum constant and inequality", lemma_second_part},
      {"edge dilatation bound", edge_dilatation},
      {"per-pair tree compression", tree_compression},
      {"complex compression on grid(300x300)", complex_compression},
      {"normal cube path key property", key_property},
      {"cube and tree embeddings agree", cross_module},
      {"compression ceiling stability", bourgain},
      {"product and l1/l2 identities", product_identities},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %s: %s [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
