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

#ifndef EVENTREE_EVEN_TREE_HPP
#define EVENTREE_EVEN_TREE_HPP

#include <cstdint>
#include <vector>

#include "eventree/factor.hpp"
#include "eventree/graph.hpp"

namespace eventree {

// Tree side labels, indexed by vertex.
inline constexpr std::int8_t kOutside = -1;
inline constexpr std::int8_t kLeafSide = 0;
inline constexpr std::int8_t kInnerSide = 1;

// An even tree together with a good {1,2}-factor of the vertices it misses.
struct GoodEvenTree {
  std::vector<Edge> edges;
  // kLeafSide / kInnerSide for tree vertices (every leaf is on kLeafSide),
  // kOutside for the rest.
  std::vector<std::int8_t> side;
  Factor residual;

  std::vector<Vertex> vertices() const;
  std::size_t vertex_count() const;
  bool spanning() const { return vertex_count() == side.size(); }
};

struct LeafSides {
  std::vector<Vertex> leaf_side;   // X0: contains every leaf
  std::vector<Vertex> inner_side;  // Y0
};

// Splits the tree's unique 2-coloring into the leaf class and the other
// class. Throws Error{NotEvenTree} if leaves fall in both classes and
// Error{NotATree} if the edges do not form a tree.
LeafSides leaf_sides(std::span<const Edge> tree_edges);

// Per-vertex side labels over n vertices derived from leaf_sides.
std::vector<std::int8_t> side_labels(Vertex n, std::span<const Edge> tree_edges);

}  // namespace eventree

#endif  // EVENTREE_EVEN_TREE_HPP
