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

#ifndef EVENTREE_FACTOR_HPP
#define EVENTREE_FACTOR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "eventree/graph.hpp"

namespace eventree {

enum class ComponentKind { SingleEdge, Cycle };

// One component of a good {1,2}-factor: a single edge or a cycle.
//
// `ring` lists the vertices. A SingleEdge holds its two endpoints ascending.
// A Cycle holds at least three distinct vertices in ring order, rotated to
// start at its smallest vertex and oriented so that ring[1] < ring.back().
struct FactorComponent {
  ComponentKind kind = ComponentKind::SingleEdge;
  std::vector<Vertex> ring;

  static FactorComponent single_edge(Vertex a, Vertex b);
  static FactorComponent cycle(std::vector<Vertex> ring);

  std::size_t order() const noexcept { return ring.size(); }
  bool is_cycle() const noexcept { return kind == ComponentKind::Cycle; }
  bool is_odd_cycle() const noexcept { return is_cycle() && ring.size() % 2 == 1; }
  // Even cycles and single edges are the bipartite (balanced) components.
  bool is_balanced() const noexcept { return !is_odd_cycle(); }
  Vertex min_vertex() const noexcept { return ring.front(); }

  bool contains(Vertex v) const noexcept;
  // Ring position of v, or npos.
  std::size_t position(Vertex v) const noexcept;
  // The one or two factor neighbors of v, ascending.
  std::vector<Vertex> factor_neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  friend bool operator==(const FactorComponent&, const FactorComponent&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct FactorCensus {
  std::size_t single_edges = 0;
  std::size_t even_cycles = 0;
  std::size_t odd_cycles = 0;
};

struct Factor {
  std::vector<FactorComponent> components;

  std::vector<Vertex> covered() const;
  std::vector<Edge> edges() const;
  bool has_cycle() const noexcept;
  FactorCensus census() const noexcept;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Orders components by smallest vertex.
void canonicalize(Factor& f);

// Turns a successor permutation without fixed points into a factor:
// 2-cycles become SingleEdge components, longer cycles become Cycles.
// Vertices with successor kNoVertex are skipped. Throws Error{BadFactor}.
Factor factor_from_successor(std::span<const Vertex> successor);

// Bipartite graph with n left and n right vertices. Each arc remembers the
// original graph edge it lifts.
struct CoverArc {
  Vertex right = 0;
  std::size_t edge = 0;
};

struct BipartiteCover {
  Vertex n = 0;
  std::vector<std::vector<CoverArc>> left;

  std::size_t arc_count() const noexcept;
};

// Left copy of u joined to right copy of v, and left v to right u, for each
// edge uv.
BipartiteCover bipartite_double_cover(const Graph& g);

struct CoverMatching {
  std::vector<Vertex> mate;  // right partner of each left vertex, or kNoVertex
  std::vector<std::size_t> edge;  // original edge of the chosen arc
  std::size_t size = 0;

  bool perfect() const noexcept { return size == mate.size(); }
};

// Maximum-cardinality matching by Hopcroft-Karp.
CoverMatching max_bipartite_matching(const BipartiteCover& cover);

// Good {1,2}-factor from a perfect matching of the double cover. Throws
// Error{NotRegular} unless g is r-regular with r >= 1.
Factor good_12_factor(const Graph& g);

// Closed trail: walk.front() == walk.back(), edges[i] joins walk[i] and
// walk[i + 1].
struct EulerCircuit {
  std::vector<Vertex> walk;
  std::vector<std::size_t> edges;
};

// One circuit per connected component that has edges, each edge used once.
// Throws Error{OddDegree}.
std::vector<EulerCircuit> euler_circuits(const Graph& g);

// A 2-factor of a 2k-regular graph (k >= 1). Throws Error{NotEvenRegular}.
Factor petersen_two_factor(const Graph& g);

// For odd r: returns f if it already has a cycle, otherwise a 2-factor of
// g - E(f). Throws Error{NotOddRegular | BadFactor}.
Factor ensure_cycle_component(const Graph& g, Factor f);

}  // namespace eventree

#endif  // EVENTREE_FACTOR_HPP
