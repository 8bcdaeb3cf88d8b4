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

#ifndef EVENTREE_GRAPH_HPP
#define EVENTREE_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace eventree {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

// Undirected edge. Graph and every algorithm keep edges normalized (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is stored in CSR form with neighbor lists sorted ascending, and
// each adjacency slot carries the index of its edge in edges(). Edges are
// sorted lexicographically. Both orders are canonical, so every search that
// walks them in order is deterministic.
class Graph {
 public:
  Graph() = default;

  Vertex order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }
  // Edge indices parallel to neighbors(v).
  std::span<const std::size_t> incident_edges(Vertex v) const noexcept {
    return {nbr_edges_.data() + offsets_[v], nbr_edges_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }

  bool has_edge(Vertex a, Vertex b) const noexcept;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const noexcept;

  friend Graph build_graph(Vertex n, std::span<const Edge> edges);

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> nbrs_;
  std::vector<std::size_t> nbr_edges_;
};

// Throws Error{LoopEdge | ParallelEdge | VertexOutOfRange}.
Graph build_graph(Vertex n, std::span<const Edge> edges);
inline Graph build_graph(Vertex n, const std::vector<Edge>& edges) {
  return build_graph(n, std::span<const Edge>(edges));
}

// Copy of g with the listed edges removed (edges not in g are ignored).
Graph without_edges(const Graph& g, std::span<const Edge> removed);

// Common degree when g is regular.
std::optional<int> degree_profile(const Graph& g);

bool is_connected(const Graph& g);

// Component id per vertex, numbered in order of lowest member.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

struct TwoColoring {
  std::vector<std::uint8_t> color;
  // Odd closed walk w0 w1 ... w(k-1) (closing edge w(k-1) w0, k odd).
  std::optional<std::vector<Vertex>> odd_cycle;

  bool bipartite() const noexcept { return !odd_cycle.has_value(); }
};

// BFS 2-coloring from vertex 0. Throws Error{Disconnected}.
TwoColoring two_color(const Graph& g);

// Component-wise check; accepts disconnected graphs.
bool is_bipartite(const Graph& g);

// Cut edges, sorted.
std::vector<Edge> bridges(const Graph& g);

}  // namespace eventree

#endif  // EVENTREE_GRAPH_HPP
