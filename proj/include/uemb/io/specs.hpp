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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "uemb/core/weight.hpp"
#include "uemb/cube/generators.hpp"
#include "uemb/metrics/sampler.hpp"
#include "uemb/tree/generators.hpp"

namespace uemb {

/// Malformed user input: spec strings, space files, CSV files. The CLI maps
/// it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tree specs:
///   path:L  spider:LEGSxLEN  binary-sample:DEPTHxRAYS@SEED  caterpillar:SPINExHAIR
TreeSpec parse_tree_spec(std::string_view text);
std::string describe(const TreeSpec& spec);

/// Cube specs:
///   grid:AxB[xC]  staircase:K  staircase:H1,H2,...  from-tree:<tree spec>
///   tree-product:<tree spec>*<tree spec>
CubeSpec parse_cube_spec(std::string_view text);
std::string describe(const CubeSpec& spec);

/// True when `text` names a tree kind (path, spider, binary-sample, caterpillar).
bool is_tree_spec(std::string_view text);

/// paper, paper:M, power:ALPHA, unit.
WeightFunction parse_weight(std::string_view text);

/// exhaustive, uniform:N[@SEED], stratified:K[@SEED]. Randomized samplers
/// without an inline seed take `fallback_seed`; if that is also absent the
/// spec is rejected.
PairSampler parse_sampler(std::string_view text, const std::uint64_t* fallback_seed = nullptr);

/// Strict decimal parsers; throw InputError naming `what`.
std::uint64_t parse_unsigned(std::string_view text, std::string_view what);
double parse_real(std::string_view text, std::string_view what);

}  // namespace uemb
