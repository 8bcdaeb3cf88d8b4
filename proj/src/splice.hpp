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

#ifndef EVENTREE_SRC_SPLICE_HPP
#define EVENTREE_SRC_SPLICE_HPP

// Chain surgery shared by the good-tree builder and the spanning augmenter.
// Both grow a forest of components linked by entry edges (Y side of the
// predecessor to X side of the successor) and open chains of it into paths.

#include <optional>
#include <span>
#include <vector>

#include "eventree/factor.hpp"
#include "eventree/tree_builder.hpp"

namespace eventree::detail {

using EntryTable = std::span<const std::optional<EntryEdge>>;

// Components from the root down to c.
std::vector<std::size_t> chain_to(EntryTable entry, std::size_t c);

enum class Opening { E1, E2 };

// Entry edges and opened components along `chain`. Every component but the
// last is opened with e1 at the vertex the next entry edge leaves from; the
// last one with e1 or e2 at `last_vertex`.
void append_chain(const Factor& f, EntryTable entry, std::span<const std::size_t> chain,
                  Vertex last_vertex, Opening last_opening, std::vector<Edge>& out);

struct YYSplice {
  std::vector<Edge> edges;
  std::vector<std::size_t> absorbed;
  // The two chains meet in a common component.
  bool shared = false;
};

// Joins the chains to F_p and F_q through the edge y_p y_q.
YYSplice splice_yy(const Factor& f, EntryTable entry, YYEdge yy);

// Builds the tree from `edges`, drops `absorbed` from the residual and
// verifies the result. Throws Error{SpliceInvariantViolation}.
GoodEvenTree assemble(const Graph& g, const Factor& f, std::vector<Edge> edges,
                      std::span<const std::size_t> absorbed);

}  // namespace eventree::detail

#endif  // EVENTREE_SRC_SPLICE_HPP
