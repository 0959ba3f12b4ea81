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

#include "uemb/io/commands.hpp"

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uemb/core/lemma.hpp"
#include "uemb/cube/embedding.hpp"
#include "uemb/cube/normal_cube_path.hpp"
#include "uemb/cube/validate.hpp"
#include "uemb/io/profile_csv.hpp"
#include "uemb/io/space_file.hpp"
#include "uemb/io/specs.hpp"
#include "uemb/io/text_file.hpp"
#include "uemb/metrics/bounds.hpp"
#include "uemb/metrics/checks.hpp"
#include "uemb/metrics/profile.hpp"
#include "uemb/tree/embedding.hpp"

namespace uemb {
namespace {

// Vertex visits spent on median validation of an input file when no explicit
// triple count is given.
constexpr std::uint64_t kValidationWork = 50'000'000;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

struct GenerateArgs {
  std::string space;
  std::optional<std::uint32_t> len, legs, leg_len, depth, rays, spine, hair, columns;
  std::optional<std::uint64_t> seed;
  std::string dims, heights, left, right, tree, output;
  std::uint64_t budget = kDefaultVertexBudget;
};

struct EmbedArgs {
  std::string space, weight = "paper", output;
  std::uint32_t vertex = 0;
};

struct MeasureArgs {
  std::string space, weight = "paper", sampler = "exhaustive", output;
  std::optional<std::uint64_t> seed, median_triples;
  std::optional<std::uint32_t> t_min;
  bool assert_bounds = false;
};

struct VerifyArgs {
  std::vector<std::string> suites;
  std::string space, weight = "paper";
  std::uint64_t n_max = 1'000'000, seed = 1, count = 10'000;
  std::optional<std::uint64_t> median_triples;
};

struct ReportArgs {
  std::vector<std::string> inputs;
  std::string output;
};

std::string generator_spec(const GenerateArgs& a) {
  const std::string& kind = a.space;
  if (kind.find(':') != std::string::npos) return kind;
  auto need = [&](bool present, const char* flag) {
    if (!present) throw InputError("--space " + kind + " needs " + flag);
  };
  auto str = [](auto v) { return std::to_string(*v); };
  if (kind == "path") {
    need(a.len.has_value(), "--len");
    return "path:" + str(a.len);
  }
  if (kind == "spider") {
    need(a.legs && a.leg_len, "--legs and --leg-len");
    return "spider:" + str(a.legs) + "x" + str(a.leg_len);
  }
  if (kind == "binary-sample") {
    need(a.depth && a.rays, "--depth and --rays");
    need(a.seed.has_value(), "--seed");
    return "binary-sample:" + str(a.depth) + "x" + str(a.rays) + "@" + str(a.seed);
  }
  if (kind == "caterpillar") {
    need(a.spine && a.hair, "--spine and --hair");
    return "caterpillar:" + str(a.spine) + "x" + str(a.hair);
  }
  if (kind == "grid") {
    need(!a.dims.empty(), "--dims");
    return "grid:" + a.dims;
  }
  if (kind == "staircase") {
    need(a.columns || !a.heights.empty(), "--columns or --heights");
    if (a.columns && !a.heights.empty()) throw InputError("--columns and --heights are exclusive");
    return a.columns ? "staircase:" + str(a.columns) : "staircase:" + a.heights;
  }
  if (kind == "tree-product") {
    need(!a.left.empty() && !a.right.empty(), "--left and --right");
    return "tree-product:" + a.left + "*" + a.right;
  }
  if (kind == "from-tree") {
    need(!a.tree.empty(), "--tree");
    return "from-tree:" + a.tree;
  }
  throw InputError("unknown space kind '" + kind + "'");
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const std::string spec_text = generator_spec(a);
  SpaceFile file;
  std::string summary;
  if (is_tree_spec(spec_text)) {
    const TreeSpec spec = parse_tree_spec(spec_text);
    const RootedTree tree = gen_tree(spec, a.budget);
    std::optional<std::uint64_t> seed;
    if (const auto* b = std::get_if<BinarySampleSpec>(&spec)) seed = b->seed;
    file = space_file_from(tree, SpaceFile::Generator{describe(spec), seed});
    summary = "tree: " + std::to_string(tree.vertex_count()) + " vertices, " + std::to_string(file.edges.size()) +
              " edges, height " + std::to_string(tree.height());
  } else {
    const CubeSpec spec = parse_cube_spec(spec_text);
    const MedianGraph g = gen_cube(spec, a.budget);
    file = space_file_from(g, SpaceFile::Generator{describe(spec), a.seed});
    summary = "median_graph: " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
              " edges, " + std::to_string(g.hyperplane_count()) + " hyperplanes, dimension " +
              std::to_string(g.dimension());
  }
  if (a.output.empty()) {
    out << format_space_file(file);
    err << summary << '\n';
  } else {
    save_space_file(a.output, file);
    out << summary << '\n';
  }
  return kExitOk;
}

std::uint64_t validation_triples(std::size_t n, const std::optional<std::uint64_t>& requested) {
  if (requested) return *requested;
  const std::uint64_t per_triple = n <= 3000 ? n : 4 * n;
  return std::max<std::uint64_t>(16, kValidationWork / std::max<std::uint64_t>(per_triple, 1));
}

// Loads a median_graph file after checking the median property on a budget of
// triples; trees are accepted as 1-dimensional complexes without the check.
MedianGraph load_complex(const SpaceFile& file, const std::optional<std::uint64_t>& triples, std::uint64_t seed) {
  if (file.type == SpaceFile::Type::kMedianGraph) {
    const Graph g = to_graph(file);
    const MedianVerdict verdict = validate_median(g, validation_triples(g.vertex_count(), triples), seed);
    if (!verdict.valid) {
      std::string msg = "not a median graph: " + verdict.reason;
      if (verdict.violation) {
        const auto& [x, y, z] = *verdict.violation;
        msg += " (" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")";
      }
      throw InputError(msg);
    }
  }
  return to_median_graph(file);
}

int cmd_embed(const EmbedArgs& a, std::ostream& out) {
  const SpaceFile file = load_space_file(a.space);
  const WeightFunction w = parse_weight(a.weight);
  if (a.vertex >= file.n) throw InputError("vertex " + std::to_string(a.vertex) + " is out of range");
  SparseVector f;
  if (file.type == SpaceFile::Type::kTree) {
    f = tree_embed(to_tree(file), w, a.vertex);
  } else {
    f = cube_embed(to_median_graph(file), w, a.vertex);
  }
  std::string text = "key,value\n";
  for (std::size_t i = 0; i < f.support_size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", f.values()[i]);
    text += std::to_string(f.keys()[i].value) + "," + buf + "\n";
  }
  if (a.output.empty()) {
    out << text;
  } else {
    write_text_file(a.output, text);
  }
  return kExitOk;
}

int cmd_measure(const MeasureArgs& a, std::ostream& out, std::ostream& err) {
  const SpaceFile file = load_space_file(a.space);
  const WeightFunction w = parse_weight(a.weight);
  const PairSampler sampler = parse_sampler(a.sampler, a.seed ? &*a.seed : nullptr);
  const std::uint32_t t_min = a.t_min.value_or(w.kind() == WeightFunction::Kind::kPaper ? 2 * w.cutoff() : 2);
  if (t_min < 2) throw InputError("--t-min must be at least 2");

  std::optional<RootedTree> tree;
  std::optional<MedianGraph> complex;
  std::optional<CubeEmbedder> cube;
  MetricSpace space;
  Embedding embedding;
  unsigned dimension = 1;
  const std::string descriptor = file.generator ? file.generator->spec : a.space;
  if (file.type == SpaceFile::Type::kTree) {
    tree.emplace(to_tree(file));
    space = metric_space(*tree, descriptor);
    embedding = [&](Vertex v) { return tree_embed(*tree, w, v); };
  } else {
    complex.emplace(load_complex(file, a.median_triples, a.seed.value_or(0)));
    cube.emplace(*complex, w);
    space = metric_space(*complex, descriptor);
    embedding = [&](Vertex v) { return (*cube)(v); };
    dimension = complex->dimension();
  }
  if (space.vertex_count < 2) throw InputError("space needs at least two vertices");

  const CompressionProfile prof = profile(space, embedding, sampler, w.describe());
  const BoundCurve lower = paper_lower_for(w, dimension);
  const BoundCurve upper = linear_upper_for(w, dimension);
  const std::string csv = format_profile_csv(profile_rows(prof, lower, upper));

  std::ostream& log = a.output.empty() ? err : out;
  if (a.output.empty()) {
    out << csv;
  } else {
    write_text_file(a.output, csv);
  }
  std::uint64_t pairs = 0;
  for (const auto& e : prof.entries) pairs += e.pairs;
  log << descriptor << ": dimension " << dimension << ", weight " << w.describe() << ", sampler "
      << describe(sampler) << ", " << pairs << " pairs over " << prof.entries.size() << " distances\n";
  log << "lower: " << describe(lower) << "\nupper: " << describe(upper) << '\n';
  if (!a.assert_bounds) return kExitOk;

  const ProfileVerdict verdict = check_profile_against(prof, lower, upper, t_min);
  log << (verdict.pass ? "PASS" : "FAIL") << " bounds for t >= " << t_min << ": " << verdict.rows_checked
      << " rows, min slack " << num(verdict.min_slack) << " at t = " << verdict.slack_at;
  if (!verdict.failures.empty()) log << ", " << verdict.failures.size() << " failing rows from t = " << verdict.failures.front();
  log << '\n';
  return verdict.pass ? kExitOk : kExitAssertion;
}

void print_check(const CheckResult& r, std::ostream& out) {
  out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.checked << " checked, " << r.violations
      << " violations, margin " << num(r.margin);
  if (!r.detail.empty()) out << "; " << r.detail;
  out << '\n';
}

bool run_lemma_suite(const VerifyArgs& a, std::ostream& out) {
  const WeightFunction w = parse_weight(a.weight);
  if (w.kind() != WeightFunction::Kind::kPaper) throw InputError("the lemma suite needs a paper weight");
  if (a.n_max < w.cutoff()) throw InputError("--N-max must be at least the cutoff");
  const LemmaReport r = verify_lemma(w, a.n_max);
  for (const auto& [n, s] : r.partial_sums) out << "  diff_sq_sum(" << n << ") = " << num(s) << '\n';
  out << "  tail from M: " << num(r.tail_sum) << " <= 1/ln ln M = " << num(r.tail_bound) << " (margin "
      << num(r.margin) << ")\n";
  out << "  lemma2_constant = " << num(r.constant.value) << " at N = " << r.constant.argmax << "; with N_max/10: "
      << num(r.constant_tenth.value) << " at N = " << r.constant_tenth.argmax << '\n';
  out << "  partial sums monotone: " << (r.partial_sums_monotone ? "yes" : "no")
      << ", inequality for every N <= " << a.n_max << ": " << (r.inequality_holds ? "yes" : "no") << '\n';
  out << (r.pass() ? "[PASS] " : "[FAIL] ") << "lemma checks for " << w.describe() << '\n';
  return r.pass();
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  static const std::vector<std::string> known = {"lemma",   "oracle",     "normalpath",
                                                 "product", "dilatation", "compression"};
  for (const auto& s : a.suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) throw InputError("unknown suite '" + s + "'");
  }

  std::optional<SpaceFile> file;
  auto space = [&]() -> const SpaceFile& {
    if (a.space.empty()) throw InputError("this suite needs --space");
    if (!file) file = load_space_file(a.space);
    return *file;
  };
  std::optional<MedianGraph> complex;
  auto as_complex = [&]() -> const MedianGraph& {
    if (!complex) complex.emplace(load_complex(space(), a.median_triples, a.seed));
    return *complex;
  };

  bool all = true;
  for (const auto& s : a.suites) {
    if (s == "lemma") {
      all = run_lemma_suite(a, out) && all;
      continue;
    }
    CheckResult r;
    if (s == "product") {
      r = check_product_identities(a.seed, a.count);
    } else if (s == "normalpath") {
      r = check_normal_paths(as_complex());
    } else {
      const bool is_tree = space().type == SpaceFile::Type::kTree;
      const WeightFunction w = parse_weight(a.weight);
      if (s == "oracle") {
        r = is_tree ? check_unit_oracle(to_tree(space())) : check_unit_oracle(as_complex());
      } else if (s == "dilatation") {
        r = is_tree ? check_edge_dilatation(to_tree(space()), w) : check_edge_dilatation(as_complex(), w);
      } else {
        r = is_tree ? check_tree_compression(to_tree(space()), w) : check_cube_compression(as_complex(), w);
      }
    }
    print_check(r, out);
    all = all && r.pass;
  }
  return all ? kExitOk : kExitAssertion;
}

int cmd_report(const ReportArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<ProfileRow> rows = load_profile_csv(a.inputs.front());
  for (std::size_t i = 1; i < a.inputs.size(); ++i) rows = merge_profile_rows(rows, load_profile_csv(a.inputs[i]));
  const std::string csv = format_profile_csv(rows);
  if (a.output.empty()) {
    out << csv;
  } else {
    write_text_file(a.output, csv);
  }
  (a.output.empty() ? err : out) << "merged " << a.inputs.size() << " profiles into " << rows.size() << " rows\n";
  return kExitOk;
}

void warn_uncertified(const std::string& weight, std::ostream& err) {
  try {
    const WeightFunction w = parse_weight(weight);
    if (!w.monotone_certified()) {
      err << "warning: " << w.describe() << " is below the monotone cutoff " << kDefaultPaperCutoff
          << "; the weight may decrease on [" << w.cutoff() << ", " << kDefaultPaperCutoff << "]\n";
    }
  } catch (const std::exception&) {
    // Reported by the command itself.
  }
}

template <class F>
int guarded(F&& f, std::ostream& err) {
  try {
    return f();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BudgetError& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
  } catch (const SideComputationError& e) {
    err << "error: not a median graph: " << e.what() << '\n';
  } catch (const CubeSpanError& e) {
    err << "error: not a median graph: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInput;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted-path embeddings of trees and median graphs into Hilbert space", "uemb"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated space file");
  generate
      ->add_option("--space", gen.space,
                   "path, spider, binary-sample, caterpillar, grid, staircase, tree-product, from-tree, or a full spec")
      ->required();
  generate->add_option("--len", gen.len, "path length");
  generate->add_option("--legs", gen.legs, "spider leg count");
  generate->add_option("--leg-len", gen.leg_len, "spider leg length");
  generate->add_option("--depth", gen.depth, "binary-sample depth");
  generate->add_option("--rays", gen.rays, "binary-sample ray count");
  generate->add_option("--seed", gen.seed, "seed for randomized generators");
  generate->add_option("--spine", gen.spine, "caterpillar spine length");
  generate->add_option("--hair", gen.hair, "caterpillar hair length");
  generate->add_option("--dims", gen.dims, "grid sides, e.g. 20x20");
  generate->add_option("--columns", gen.columns, "staircase with heights K..1");
  generate->add_option("--heights", gen.heights, "staircase column heights, e.g. 5,3,1");
  generate->add_option("--left", gen.left, "tree-product left factor spec");
  generate->add_option("--right", gen.right, "tree-product right factor spec");
  generate->add_option("--tree", gen.tree, "from-tree spec");
  generate->add_option("--budget", gen.budget, "vertex budget");
  generate->add_option("-o,--output", gen.output, "output file (stdout if absent)");

  EmbedArgs emb;
  auto* embed = app.add_subcommand("embed", "Print the sparse vector of one vertex");
  embed->add_option("--space", emb.space, "space file")->required();
  embed->add_option("--weight", emb.weight, "paper[:M], power:ALPHA or unit");
  embed->add_option("--vertex", emb.vertex, "vertex id")->required();
  embed->add_option("-o,--output", emb.output, "output file (stdout if absent)");

  MeasureArgs mea;
  auto* measure = app.add_subcommand("measure", "Write the compression profile of a space as CSV");
  measure->add_option("--space", mea.space, "space file")->required();
  measure->add_option("--weight", mea.weight, "paper[:M], power:ALPHA or unit");
  measure->add_option("--sampler", mea.sampler, "exhaustive, uniform:N[@SEED] or stratified:K[@SEED]");
  measure->add_option("--seed", mea.seed, "seed for randomized samplers and median validation");
  measure->add_option("--t-min", mea.t_min, "smallest distance checked by --assert (default 2M)");
  measure->add_option("--median-triples", mea.median_triples, "triples sampled when validating a median graph");
  measure->add_flag("--assert", mea.assert_bounds, "exit 1 unless the profile lies between the bound curves");
  measure->add_option("-o,--output", mea.output, "output CSV (stdout if absent)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", ver.suites, "lemma, oracle, normalpath, product, dilatation, compression")
      ->required();
  verify->add_option("--space", ver.space, "space file for space-based suites");
  verify->add_option("--weight", ver.weight, "weight for lemma, dilatation and compression");
  verify->add_option("--N-max", ver.n_max, "scan limit for the lemma suite");
  verify->add_option("--seed", ver.seed, "seed for the product suite and median validation");
  verify->add_option("--count", ver.count, "random tuples for the product suite");
  verify->add_option("--median-triples", ver.median_triples, "triples sampled when validating a median graph");

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "Merge profile CSVs");
  report->add_option("inputs", rep.inputs, "profile CSV files")->required();
  report->add_option("-o,--output", rep.output, "output CSV (stdout if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  if (embed->parsed()) warn_uncertified(emb.weight, err);
  if (measure->parsed()) warn_uncertified(mea.weight, err);
  if (verify->parsed()) warn_uncertified(ver.weight, err);

  if (generate->parsed()) return guarded([&] { return cmd_generate(gen, out, err); }, err);
  if (embed->parsed()) return guarded([&] { return cmd_embed(emb, out); }, err);
  if (measure->parsed()) return guarded([&] { return cmd_measure(mea, out, err); }, err);
  if (verify->parsed()) return guarded([&] { return cmd_verify(ver, out); }, err);
  return guarded([&] { return cmd_report(rep, out, err); }, err);
}

}  // namespace uemb
