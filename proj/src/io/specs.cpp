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

#include "uemb/io/specs.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

namespace uemb {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
  const std::uint64_t v = parse_unsigned(text, what);
  if (v > std::numeric_limits<std::uint32_t>::max()) throw InputError(std::string(what) + " is too large");
  return static_cast<std::uint32_t>(v);
}

std::pair<std::string_view, std::string_view> kind_and_args(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) return {text, {}};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

std::vector<std::uint32_t> parse_dims(std::string_view text, char sep, std::string_view what) {
  std::vector<std::uint32_t> out;
  for (auto part : split(text, sep)) out.push_back(parse_u32(part, what));
  return out;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join(const std::vector<std::uint32_t>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

double parse_real(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

bool is_tree_spec(std::string_view text) {
  const auto kind = kind_and_args(text).first;
  return kind == "path" || kind == "spider" || kind == "binary-sample" || kind == "caterpillar";
}

TreeSpec parse_tree_spec(std::string_view text) {
  const auto [kind, args] = kind_and_args(text);
  if (kind == "path") return PathSpec{parse_u32(args, "path length")};
  if (kind == "spider") {
    const auto parts = split(args, 'x');
    if (parts.size() != 2) throw InputError("spider spec is spider:LEGSxLEN, got '" + std::string(text) + "'");
    return SpiderSpec{parse_u32(parts[0], "leg count"), parse_u32(parts[1], "leg length")};
  }
  if (kind == "binary-sample") {
    const std::size_t at = args.find('@');
    if (at == std::string_view::npos) throw InputError("binary-sample needs an explicit seed: DEPTHxRAYS@SEED");
    const auto parts = split(args.substr(0, at), 'x');
    if (parts.size() != 2) throw InputError("binary-sample spec is binary-sample:DEPTHxRAYS@SEED");
    return BinarySampleSpec{parse_u32(parts[0], "depth"), parse_u32(parts[1], "ray count"),
                            parse_unsigned(args.substr(at + 1), "seed")};
  }
  if (kind == "caterpillar") {
    const auto parts = split(args, 'x');
    if (parts.size() != 2) throw InputError("caterpillar spec is caterpillar:SPINExHAIR");
    return CaterpillarSpec{parse_u32(parts[0], "spine length"), parse_u32(parts[1], "hair length")};
  }
  throw InputError("unknown tree kind '" + std::string(kind) + "'");
}

std::string describe(const TreeSpec& spec) {
  return std::visit(Overloaded{
                        [](const PathSpec& s) { return "path:" + std::to_string(s.length); },
                        [](const SpiderSpec& s) {
                          return "spider:" + std::to_string(s.legs) + "x" + std::to_string(s.leg_length);
                        },
                        [](const BinarySampleSpec& s) {
                          return "binary-sample:" + std::to_string(s.depth) + "x" + std::to_string(s.rays) + "@" +
                                 std::to_string(s.seed);
                        },
                        [](const CaterpillarSpec& s) {
                          return "caterpillar:" + std::to_string(s.spine) + "x" + std::to_string(s.hair);
                        },
                    },
                    spec);
}

CubeSpec parse_cube_spec(std::string_view text) {
  const auto [kind, args] = kind_and_args(text);
  if (kind == "grid") return GridSpec{parse_dims(args, 'x', "grid side")};
  if (kind == "staircase") {
    if (args.find(',') == std::string_view::npos) return staircase_columns(parse_u32(args, "column count"));
    return StaircaseSpec{parse_dims(args, ',', "column height")};
  }
  if (kind == "from-tree") return FromTreeSpec{parse_tree_spec(args)};
  if (kind == "tree-product") {
    const std::size_t star = args.find('*');
    if (star == std::string_view::npos) throw InputError("tree-product spec is tree-product:<tree>*<tree>");
    return TreeProductSpec{parse_tree_spec(args.substr(0, star)), parse_tree_spec(args.substr(star + 1))};
  }
  throw InputError("unknown cube kind '" + std::string(kind) + "'");
}

std::string describe(const CubeSpec& spec) {
  return std::visit(Overloaded{
                        [](const FromTreeSpec& s) { return "from-tree:" + describe(s.tree); },
                        [](const GridSpec& s) { return "grid:" + join(s.dims, 'x'); },
                        [](const StaircaseSpec& s) { return "staircase:" + join(s.heights, ','); },
                        [](const TreeProductSpec& s) {
                          return "tree-product:" + describe(s.left) + "*" + describe(s.right);
                        },
                    },
                    spec);
}

WeightFunction parse_weight(std::string_view text) {
  const auto [kind, args] = kind_and_args(text);
  try {
    if (kind == "paper") {
      return args.empty() ? WeightFunction::paper() : WeightFunction::paper(parse_u32(args, "cutoff"));
    }
    if (kind == "power") return WeightFunction::power(parse_real(args, "exponent"));
    if (kind == "unit" && args.empty()) return WeightFunction::unit();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("unknown weight '" + std::string(text) + "' (paper[:M], power:ALPHA, unit)");
}

PairSampler parse_sampler(std::string_view text, const std::uint64_t* fallback_seed) {
  const auto [kind, rest] = kind_and_args(text);
  if (kind == "exhaustive" && rest.empty()) return ExhaustiveSampler{};
  if (kind != "uniform" && kind != "stratified") {
    throw InputError("unknown sampler '" + std::string(text) + "' (exhaustive, uniform:N, stratified:K)");
  }
  std::string_view args = rest;
  std::uint64_t seed = 0;
  if (const std::size_t at = rest.find('@'); at != std::string_view::npos) {
    args = rest.substr(0, at);
    seed = parse_unsigned(rest.substr(at + 1), "sampler seed");
  } else if (fallback_seed != nullptr) {
    seed = *fallback_seed;
  } else {
    throw InputError("sampler '" + std::string(text) + "' needs a seed (append @SEED or pass --seed)");
  }
  if (kind == "uniform") return UniformSampler{parse_unsigned(args, "pair count"), seed};
  return StratifiedSampler{parse_u32(args, "pairs per bucket"), seed};
}

}  // namespace uemb
