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

#include "eventree/even_tree.hpp"

#include <algorithm>
#include <string>

#include "eventree/error.hpp"

namespace eventree {

std::vector<Vertex> GoodEvenTree::vertices() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v] != kOutside) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::size_t GoodEvenTree::vertex_count() const {
  return static_cast<std::size_t>(
      std::count_if(side.begin(), side.end(), [](std::int8_t s) { return s != kOutside; }));
}

LeafSides leaf_sides(std::span<const Edge> tree_edges) {
  LeafSides out;
  if (tree_edges.empty()) return out;

  // Compact the vertex set; tree_edges may name arbitrary ids.
  Vertex max_id = 0;
  for (const Edge& e : tree_edges) {
    if (e.u < 0 || e.v < 0) throw Error(Errc::NotATree, "negative vertex id");
    max_id = std::max({max_id, e.u, e.v});
  }
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(static_cast<std::size_t>(max_id) + 1, kUnseen);
  std::vector<Vertex> ids;
  ids.reserve(tree_edges.size() + 1);
  for (const Edge& e : tree_edges) {
    for (Vertex v : {e.u, e.v}) {
      if (index[v] == kUnseen) {
        index[v] = ids.size();
        ids.push_back(v);
      }
    }
  }
  if (ids.size() != tree_edges.size() + 1) {
    throw Error(Errc::NotATree, "edge count does not match vertex count");
  }
  // CSR adjacency over compact ids.
  std::vector<std::size_t> offsets(ids.size() + 1, 0);
  for (const Edge& e : tree_edges) {
    ++offsets[index[e.u] + 1];
    ++offsets[index[e.v] + 1];
  }
  for (std::size_t i = 0; i < ids.size(); ++i) offsets[i + 1] += offsets[i];
  std::vector<std::size_t> adj(offsets.back());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : tree_edges) {
    adj[fill[index[e.u]]++] = index[e.v];
    adj[fill[index[e.v]]++] = index[e.u];
  }
  auto degree = [&](std::size_t i) { return offsets[i + 1] - offsets[i]; };

  std::vector<std::int8_t> color(ids.size(), -1);
  std::vector<std::size_t> stack{0};
  color[0] = 0;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t k = offsets[v]; k < offsets[v + 1]; ++k) {
      const auto w = adj[k];
      if (color[w] < 0) {
        color[w] = static_cast<std::int8_t>(1 - color[v]);
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != ids.size()) throw Error(Errc::NotATree, "tree edges are disconnected");

  int leaf_color = -1;
  Vertex first_leaf = kNoVertex;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (degree(i) != 1) continue;
    if (leaf_color < 0) {
      leaf_color = color[i];
      first_leaf = ids[i];
    } else if (color[i] != leaf_color) {
      throw Error(Errc::NotEvenTree, "leaves " + std::to_string(first_leaf) + " and " + std::to_string(ids[i]) +
                                         " are at odd distance");
    }
  }
  for (std::size_t v = 0; v < index.size(); ++v) {
    if (index[v] == kUnseen) continue;
    (color[index[v]] == leaf_color ? out.leaf_side : out.inner_side).push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<std::int8_t> side_labels(Vertex n, std::span<const Edge> tree_edges) {
  std::vector<std::int8_t> side(static_cast<std::size_t>(n), kOutside);
  const LeafSides sides = leaf_sides(tree_edges);
  for (Vertex v : sides.leaf_side) side[v] = kLeafSide;
  for (Vertex v : sides.inner_side) side[v] = kInnerSide;
  return side;
}

}  // namespace eventree
