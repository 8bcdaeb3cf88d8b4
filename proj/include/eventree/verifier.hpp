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

#ifndef EVENTREE_VERIFIER_HPP
#define EVENTREE_VERIFIER_HPP

#include <span>
#include <string>
#include <vector>

#include "eventree/even_tree.hpp"
#include "eventree/factor.hpp"
#include "eventree/graph.hpp"

namespace eventree {

// Independent checks on pipeline output. Every function here reads only the
// host graph and the candidate object; none of them trust the side labels or
// bookkeeping the pipeline carries along.

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;  // set on failure
};

struct Certificate {
  std::vector<Check> checks;

  bool overall() const noexcept;
  void add(std::string name, bool passed, std::string witness = {});
  void append(const Certificate& other);
  // First failing check's "name: witness", or empty.
  std::string first_failure() const;
};

// Connected and acyclic on the vertices it touches, all edges in g.
Certificate verify_tree(const Graph& g, std::span<const Edge> edges);

// All leaves on one side of the tree's 2-coloring. Throws Error{NotATree}.
Certificate verify_even(std::span<const Edge> tree_edges);

// f's components partition vertex_set, each a single edge or a cycle of g.
Certificate verify_good_factor(const Graph& g, std::span<const Vertex> vertex_set, const Factor& f);

Certificate verify_good_even_tree(const Graph& g, const GoodEvenTree& t);

Certificate verify_spanning_even_tree(const Graph& g, std::span<const Edge> edges);

}  // namespace eventree

#endif  // EVENTREE_VERIFIER_HPP
