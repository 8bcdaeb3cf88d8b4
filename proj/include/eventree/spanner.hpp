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

#ifndef EVENTREE_SPANNER_HPP
#define EVENTREE_SPANNER_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "eventree/even_tree.hpp"
#include "eventree/graph.hpp"
#include "eventree/tree_builder.hpp"

namespace eventree {

enum class StepKind {
  LeafSideAbsorb,      // X0 vertex adjacent to a residual component
  Y0OddCycleAbsorb,    // Y0 vertex adjacent to an odd cycle
  Case1ReturnToTree,   // additive chain closes back onto Y0
  Case1OddCycleTail,   // additive chain ends in an odd cycle
  Case2SpliceShared,   // YY edge, chains share a component
  Case2SpliceDisjoint, // YY edge, chains seeded separately
};

std::string_view to_string(StepKind kind) noexcept;

struct AugmentationStep {
  StepKind kind = StepKind::LeafSideAbsorb;
  std::vector<FactorComponent> absorbed;
  std::vector<Edge> added;
  std::vector<Edge> removed;  // factor edges of absorbed components left out
  std::size_t tree_vertices_after = 0;
};

// The growing tree plus the residual factor, with a per-vertex index into
// the residual. side[] is recomputed after every step.
class TreeState {
 public:
  TreeState(const Graph& g, GoodEvenTree tree);

  const GoodEvenTree& tree() const noexcept { return tree_; }
  const Factor& residual() const noexcept { return tree_.residual; }
  std::int8_t side(Vertex v) const noexcept { return tree_.side[v]; }
  bool in_tree(Vertex v) const noexcept { return tree_.side[v] != kOutside; }
  // Residual component holding v (kNoComponent for tree vertices).
  std::size_t component_of(Vertex v) const noexcept { return comp_of_[v]; }
  std::size_t tree_vertices() const noexcept { return tree_size_; }
  bool spanning() const noexcept { return tree_size_ == tree_.side.size(); }
  // Residual components that are even cycles or single edges.
  std::vector<std::size_t> balanced_components() const;

  // Adds the step's edges, drops its absorbed components from the residual
  // and relabels sides, which rejects non-trees and odd trees. full_check
  // also reruns verify_good_even_tree. Throws Error{SpliceInvariantViolation}.
  void apply(const Graph& g, AugmentationStep& step, bool full_check = true);

 private:
  void reindex();

  GoodEvenTree tree_;
  std::vector<std::size_t> comp_of_;
  std::size_t tree_size_ = 0;
};

// Absorbs a residual component through an X0 edge (any component) or a Y0
// edge (odd cycles). Absent when no such edge exists.
std::optional<AugmentationStep> absorb_direct(const Graph& g, const TreeState& ts);

// Additive forest over balanced residual components, seeded from Y0.
struct AdditiveState {
  ComponentBipartition bip;
  std::vector<std::optional<EntryEdge>> entry;
  std::vector<bool> additive;
  std::vector<std::size_t> order;  // in order of joining
  std::size_t flips = 0;

  explicit AdditiveState(const TreeState& ts, Vertex n);
};

enum class AdditiveOutcomeKind { ReturnEdge, OddCycleTail, YYEdgeFound };

struct AdditiveOutcome {
  AdditiveOutcomeKind kind = AdditiveOutcomeKind::YYEdgeFound;
  Vertex y_p = kNoVertex;        // on the Y side of additive component p
  Vertex target = kNoVertex;     // y0' in Y0, v_j on the odd cycle, or y_q
  std::size_t p = kNoComponent;
  std::size_t other = kNoComponent;  // odd cycle j, or component q
};

struct SpannerOptions {
  // Extra invariant scans: full good-even-tree verification after every
  // step, no X0-residual edge once absorb_direct is empty, additive
  // components stay balanced.
  bool verify_all = false;
};

// Requires absorb_direct(g, ts) to be empty. Throws Error{LemmaViolation}.
AdditiveOutcome grow_additive_set(const Graph& g, const TreeState& ts, AdditiveState& state,
                                  const SpannerOptions& options = {});

AugmentationStep splice_to_tree(const Graph& g, const TreeState& ts, const AdditiveState& state,
                                const AdditiveOutcome& outcome);

struct SpanningResult {
  std::vector<Edge> edges;
  std::vector<AugmentationStep> steps;
  std::size_t initial_residual_components = 0;
  std::size_t initial_tree_vertices = 0;
};

// Augments t until it spans g. Throws Error{LemmaViolation |
// SpliceInvariantViolation}.
SpanningResult extend_to_spanning(const Graph& g, GoodEvenTree t, const SpannerOptions& options = {});

// build_good_even_tree followed by extend_to_spanning.
SpanningResult spanning_even_tree(const Graph& g, const SpannerOptions& options = {});

}  // namespace eventree

#endif  // EVENTREE_SPANNER_HPP
