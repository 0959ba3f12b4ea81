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

#include "uemb/io/space_file.hpp"

#include <limits>
#include <sstream>

#include "json.hpp"

#include "uemb/io/specs.hpp"
#include "uemb/io/text_file.hpp"

namespace uemb {
namespace {

using nlohmann::json;

const json& field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("space file is missing \"") + key + "\"");
  return *it;
}

std::uint64_t as_unsigned(const json& value, const std::string& what) {
  if (!value.is_number_unsigned()) {
    if (value.is_number_integer() && value.get<std::int64_t>() >= 0) return value.get<std::uint64_t>();
    throw InputError("space file: " + what + " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

Vertex as_vertex(const json& value, std::uint64_t n, const std::string& what) {
  const std::uint64_t v = as_unsigned(value, what);
  if (v >= n) throw InputError("space file: " + what + " " + std::to_string(v) + " is out of range");
  return static_cast<Vertex>(v);
}

void validate(const SpaceFile& file) {
  Graph g;
  try {
    g = to_graph(file);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("space file: ") + e.what());
  }
  if (!g.is_connected()) throw InputError("space file: graph is not connected");
  if (file.type == SpaceFile::Type::kTree && g.edge_count() + 1 != g.vertex_count()) {
    throw InputError("space file: tree has " + std::to_string(g.edge_count()) + " edges for " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

std::string_view type_name(SpaceFile::Type type) {
  return type == SpaceFile::Type::kTree ? "tree" : "median_graph";
}

SpaceFile parse_space_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("space file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("space file must be a JSON object");

  SpaceFile file;
  const json& type = field(doc, "type");
  if (type == "tree") {
    file.type = SpaceFile::Type::kTree;
  } else if (type == "median_graph") {
    file.type = SpaceFile::Type::kMedianGraph;
  } else {
    throw InputError("space file: type must be \"tree\" or \"median_graph\"");
  }
  file.n = as_unsigned(field(doc, "n"), "n");
  if (file.n == 0) throw InputError("space file: n must be positive");
  if (file.n > std::numeric_limits<Vertex>::max()) throw InputError("space file: n is too large");
  file.root = as_vertex(field(doc, "root"), file.n, "root");

  if (const auto it = doc.find("generator"); it != doc.end()) {
    if (!it->is_object() || !it->contains("spec") || !(*it)["spec"].is_string()) {
      throw InputError("space file: generator must be an object with a \"spec\" string");
    }
    SpaceFile::Generator gen{(*it)["spec"].get<std::string>(), std::nullopt};
    if (const auto seed = it->find("seed"); seed != it->end()) gen.seed = as_unsigned(*seed, "generator seed");
    file.generator = std::move(gen);
  }

  const bool has_edges = doc.contains("edges");
  const bool has_parents = doc.contains("parents");
  if (has_edges == has_parents) throw InputError("space file needs exactly one of \"edges\" or \"parents\"");
  if (has_parents) {
    if (file.type != SpaceFile::Type::kTree) throw InputError("space file: only trees may use \"parents\"");
    const json& parents = doc["parents"];
    if (!parents.is_array() || parents.size() != file.n) {
      throw InputError("space file: parents must be an array of n entries");
    }
    for (const auto& p : parents) file.parents.push_back(as_vertex(p, file.n, "parent"));
    if (file.parents[file.root] != file.root) throw InputError("space file: the root must be its own parent");
  } else {
    const json& edges = doc["edges"];
    if (!edges.is_array()) throw InputError("space file: edges must be an array");
    file.edges.reserve(edges.size());
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2) throw InputError("space file: each edge must be a [u, v] pair");
      file.edges.push_back({as_vertex(e[0], file.n, "edge endpoint"), as_vertex(e[1], file.n, "edge endpoint")});
    }
  }
  validate(file);
  return file;
}

std::string format_space_file(const SpaceFile& file) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"type\": \"" << type_name(file.type) << "\",\n";
  out << "  \"n\": " << file.n << ",\n";
  out << "  \"root\": " << file.root << ",\n";
  if (file.generator) {
    out << "  \"generator\": {\"spec\": " << json(file.generator->spec).dump();
    if (file.generator->seed) out << ", \"seed\": " << *file.generator->seed;
    out << "},\n";
  }
  if (!file.parents.empty()) {
    out << "  \"parents\": [";
    for (std::size_t i = 0; i < file.parents.size(); ++i) out << (i ? ", " : "") << file.parents[i];
    out << "]\n";
  } else {
    out << "  \"edges\": [";
    for (std::size_t i = 0; i < file.edges.size(); ++i) {
      out << (i ? ",\n    " : "\n    ") << "[" << file.edges[i].u << ", " << file.edges[i].v << "]";
    }
    out << (file.edges.empty() ? "]\n" : "\n  ]\n");
  }
  out << "}\n";
  return out.str();
}

SpaceFile load_space_file(const std::filesystem::path& path) {
  return parse_space_file(read_text_file(path, "space file"));
}

void save_space_file(const std::filesystem::path& path, const SpaceFile& file) {
  write_text_file(path, format_space_file(file));
}

SpaceFile space_file_from(const RootedTree& tree, std::optional<SpaceFile::Generator> generator) {
  SpaceFile file;
  file.type = SpaceFile::Type::kTree;
  file.n = tree.vertex_count();
  file.root = tree.root();
  file.generator = std::move(generator);
  file.edges = tree.edges();
  return file;
}

SpaceFile space_file_from(const MedianGraph& g, std::optional<SpaceFile::Generator> generator) {
  SpaceFile file;
  file.type = SpaceFile::Type::kMedianGraph;
  file.n = g.vertex_count();
  file.root = g.root();
  file.generator = std::move(generator);
  file.edges = g.graph().edges();
  return file;
}

Graph to_graph(const SpaceFile& file) {
  if (!file.parents.empty()) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < file.parents.size(); ++v) {
      if (v != file.root) edges.push_back({file.parents[v], v});
    }
    return Graph(file.n, std::move(edges));
  }
  return Graph(file.n, file.edges);
}

RootedTree to_tree(const SpaceFile& file) {
  if (file.type != SpaceFile::Type::kTree) throw InputError("expected a tree space file");
  try {
    if (!file.parents.empty()) return RootedTree::from_parents(file.parents);
    return RootedTree::from_edges(file.n, file.edges, file.root);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("space file: ") + e.what());
  }
}

MedianGraph to_median_graph(const SpaceFile& file) {
  try {
    return MedianGraph::build(to_graph(file), file.root);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("space file: ") + e.what());
  }
}

}  // namespace uemb
