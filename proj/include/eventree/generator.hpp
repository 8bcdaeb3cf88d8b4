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

#ifndef EVENTREE_GENERATOR_HPP
#define EVENTREE_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eventree/graph.hpp"

namespace eventree {

struct GenSpec {
  Vertex n = 0;
  int r = 0;
  std::uint64_t seed = 0;
  bool connected = true;
  bool nonbipartite = true;
  std::size_t rejection_budget = 10'000;
};

// Configuration-model sampling with rejection until the pairing is simple
// and meets the GenSpec constraints. Deterministic in the seed.
// Throws Error{InfeasibleSpec | RejectionBudgetExhausted}.
Graph random_regular(const GenSpec& spec);

// The 16-vertex cubic graph with three bridges and no 2-factor: a center
// vertex joined to three copies of a 5-vertex gadget.
Graph figure1_graph();

// k2 c4 c5 c6 k4 k5 k33 prism cube wagner petersen moebius-kantor figure1
std::span<const std::string_view> fixture_names();
// Throws Error{UnknownFixture}.
Graph fixture(std::string_view name);

// First even spanning tree met while enumerating spanning trees by
// include/exclude branching on edges. Runs when n <= 12, or when the
// Matrix-Tree count is at most 5e6 (n <= 64); else Error{BudgetExceeded}.
std::optional<std::vector<Edge>> brute_force_even_spanning_tree(const Graph& g);

// Number of spanning trees by the same enumeration, same budget.
std::uint64_t count_spanning_trees(const Graph& g);

// Exhaustive search for a spanning 2-regular subgraph. n <= 20, else
// Error{BudgetExceeded}.
bool brute_force_two_factor_exists(const Graph& g);

}  // namespace eventree

#endif  // EVENTREE_GENERATOR_HPP
