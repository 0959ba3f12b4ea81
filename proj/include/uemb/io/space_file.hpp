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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uemb/core/graph.hpp"
#include "uemb/cube/median_graph.hpp"
#include "uemb/tree/rooted_tree.hpp"

namespace uemb {

/// On-disk description of a space. JSON with keys, in canonical order:
///
///   type       "tree" or "median_graph"
///   n          vertex count
///   root       base point
///   generator  optional {"spec": ..., "seed": ...}
///   edges      [[u, v], ...]   (tree files may give "parents" instead)
///
/// format_space_file writes one edge per line, so a file produced by it
/// round-trips byte-identically through parse and format.
struct SpaceFile {
  enum class Type { kTree, kMedianGraph };

  struct Generator {
    std::string spec;
    std::optional<std::uint64_t> seed;
    friend bool operator==(const Generator&, const Generator&) = default;
  };

  Type type = Type::kTree;
  std::uint64_t n = 0;
  Vertex root = 0;
  std::optional<Generator> generator;
  std::vector<Edge> edges;
  /// Only for tree files that use the parent-array form; the root is its own parent.
  std::vector<Vertex> parents;

  friend bool operator==(const SpaceFile&, const SpaceFile&) = default;
};

/// Throws InputError on malformed JSON, missing or mistyped fields, ids out of
/// range, self-loops, repeated edges, or a disconnected graph. Tree files must
/// also have exactly n - 1 edges.
SpaceFile parse_space_file(std::string_view text);
std::string format_space_file(const SpaceFile& file);

/// Throws InputError if the file cannot be read.
SpaceFile load_space_file(const std::filesystem::path& path);
/// Writes the whole document or nothing (via a sibling temporary file).
void save_space_file(const std::filesystem::path& path, const SpaceFile& file);

SpaceFile space_file_from(const RootedTree& tree, std::optional<SpaceFile::Generator> generator = {});
SpaceFile space_file_from(const MedianGraph& g, std::optional<SpaceFile::Generator> generator = {});

Graph to_graph(const SpaceFile& file);
/// Throws InputError for median_graph files.
RootedTree to_tree(const SpaceFile& file);
/// Accepts both types; a tree is a 1-dimensional complex.
MedianGraph to_median_graph(const SpaceFile& file);

std::string_view type_name(SpaceFile::Type type);

}  // namespace uemb
