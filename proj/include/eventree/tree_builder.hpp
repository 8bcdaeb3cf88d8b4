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

#ifndef EVENTREE_TREE_BUILDER_HPP
#define EVENTREE_TREE_BUILDER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eventree/even_tree.hpp"
#include "eventree/factor.hpp"
#include "eventree/graph.hpp"

namespace eventree {

inline constexpr std::size_t kNoComponent = static_cast<std::size_t>(-1);

// e1(v, F): one factor edge at v for a cycle (the one toward the smaller
// neighbor), nothing for a single edge.
std::vector<Edge> e1_edges(Vertex v, const FactorComponent& comp);
// e2(v, F): both factor edges at v for a cycle, the edge itself otherwise.
std::vector<Edge> e2_edges(Vertex v, const FactorComponent& comp);
// comp's edges without the listed ones.
std::vector<Edge> component_minus(const FactorComponent& comp, std::span<const Edge> removed);

// X/Y side per vertex of a factor, flipped one component at a time. Only
// balanced components (even cycles, single edges) have a meaningful split.
class ComponentBipartition {
 public:
  ComponentBipartition(const Factor& f, Vertex n);

  std::size_t component_of(Vertex v) const noexcept { return comp_of_[v]; }
  bool in_y(Vertex v) const noexcept { return in_y_[v] != 0; }
  bool in_x(Vertex v) const noexcept { return comp_of_[v] != kNoComponent && in_y_[v] == 0; }

  void flip(std::size_t comp);
  // Flip comp if needed so that v lands on the X side.
  void orient(std::size_t comp, Vertex v);

  std::span<const Vertex> members(std::size_t comp) const noexcept { return members_[comp]; }
  std::vector<Vertex> x_side(std::size_t comp) const;
  std::vector<Vertex> y_side(std::size_t comp) const;

 private:
  std::vector<std::size_t> comp_of_;
  std::vector<std::uint8_t> in_y_;
  std::vector<std::vector<Vertex>> members_;
};

// Edge into a component from the Y side of its predecessor (pred), or from
// the tree when pred is kNoComponent.
struct EntryEdge {
  Vertex from = kNoVertex;
  Vertex to = kNoVertex;
  std::size_t pred = kNoComponent;
};

// Components reachable from the root by good sequences. Following entry
// edges from any good component leads back to the root.
struct GoodState {
  std::size_t root = kNoComponent;
  std::vector<std::size_t> good;  // in order of joining
  std::vector<bool> is_good;
  std::vector<std::optional<EntryEdge>> entry;

  static GoodState start(const Factor& f, std::size_t root);
};

// Edge y_p y_q with both ends on Y sides of good (or additive) components.
struct YYEdge {
  Vertex y_p = kNoVertex;
  Vertex y_q = kNoVertex;
  std::size_t p = kNoComponent;
  std::size_t q = kNoComponent;
};

struct GrowOutcome {
  YYEdge edge;
  std::size_t flips = 0;
};

// Tree = odd cycle i minus e1 at its smallest vertex; residual = the rest.
// Throws Error{NotOddCycle}.
GoodEvenTree tree_from_odd_cycle(Vertex n, const Factor& f, std::size_t i);

// Some edge from y_set to a vertex outside x_set and y_set. Such an edge
// exists whenever g is regular, connected and nonbipartite, y_set is
// independent, and |x_set| <= |y_set|. Throws Error{LemmaViolation} if the
// preconditions fail or no edge is found.
Edge find_escape_edge(const Graph& g, std::span<const Vertex> y_set, std::span<const Vertex> x_set);

// Adds components to the good set, flipping each newcomer so the escape edge
// lands on its X side, until an edge inside the union of good Y sides shows
// up. All components of f must be balanced.
GrowOutcome grow_good_set(const Graph& g, const Factor& f, ComponentBipartition& bip, GoodState& state);

// Builds the good even tree from a YY edge: the chain to F_p opened with e1
// at each exit and e2 at y_p, joined by y_p y_q, plus (when F_q is off that
// chain) the branch to F_q opened with e1 at y_q. Throws
// Error{SpliceInvariantViolation} if the result fails verification.
GoodEvenTree splice_case2(const Graph& g, const Factor& f, const ComponentBipartition& bip,
                          const GoodState& state, const YYEdge& yy);

struct GoodTreeTrace {
  bool odd_cycle_shortcut = false;
  std::size_t root = kNoComponent;
  std::size_t flips = 0;
  std::optional<YYEdge> yy;
  // Neither of F_p, F_q lies on the other's chain, so the tree branches.
  bool branched = false;
};

// Good even tree from a good {1,2}-factor of g that has a cycle.
GoodEvenTree build_good_even_tree(const Graph& g, const Factor& f, GoodTreeTrace* trace = nullptr);

// The factor this library uses for g: good_12_factor + ensure_cycle_component
// for odd r, petersen_two_factor for even r. Applies the precondition gates.
Factor starting_factor(const Graph& g);

// Checks g (regular, connected, nonbipartite) and builds a good even tree.
// Throws Error{NotRegular | Disconnected | Bipartite | LemmaViolation}.
GoodEvenTree build_good_even_tree(const Graph& g);

// Throws Error{NotRegular | Disconnected | Bipartite}; returns r.
int check_preconditions(const Graph& g);

}  // namespace eventree

#endif  // EVENTREE_TREE_BUILDER_HPP
