// Copyright 2026 The eventree Authors.
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

#ifndef EVENTREE_IO_HPP
#define EVENTREE_IO_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eventree/graph.hpp"

namespace eventree {

// edgelist: first line "n m", then m lines "u v" with 0-based ids.
// dimacs:   "p edge n m" then "e u v" lines with 1-based ids, "c" comments.
// auto:     dimacs when the first non-comment line starts with "p".
// '#' starts a comment line in either format.
enum class GraphFormat { Auto, EdgeList, Dimacs };

std::optional<GraphFormat> parse_format(std::string_view name);

// Throws Error{ParseError}, or Error{IoError} for unreadable files.
// Malformed graphs (loops, duplicates, ids out of range) are ParseError too.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format = GraphFormat::Auto);

// An edge list read without building a graph, so a candidate tree with loops
// or repeated edges still reaches the verifier. Same "n m" format; ids must
// lie in [0, n).
struct EdgeRecords {
  Vertex n = 0;
  std::vector<Edge> edges;
};

EdgeRecords parse_edge_records(std::string_view text);
EdgeRecords read_edge_records_file(const std::filesystem::path& path);

std::string write_edge_list(Vertex n, std::span<const Edge> edges);
std::string write_edge_list(const Graph& g);
std::string write_dimacs(const Graph& g);

}  // namespace eventree

#endif  // EVENTREE_IO_HPP
