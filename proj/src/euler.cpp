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

#include <string>

#include "eventree/error.hpp"
#include "eventree/factor.hpp"

namespace eventree {

std::vector<EulerCircuit> euler_circuits(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw Error(Errc::OddDegree, "vertex " + std::to_string(v) + " has odd degree");
    }
  }
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<bool> used(g.size(), false);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<EulerCircuit> out;

  // Hierholzer with an explicit stack of (vertex, edge used to arrive).
  struct Step {
    Vertex v;
    std::size_t via;
  };
  constexpr std::size_t kStart = static_cast<std::size_t>(-1);
  std::vector<Step> stack;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (cursor[start] >= static_cast<std::size_t>(g.degree(start))) continue;
    EulerCircuit circuit;
    stack.push_back({start, kStart});
    while (!stack.empty()) {
      const Vertex v = stack.back().v;
      auto nb = g.neighbors(v);
      auto ids = g.incident_edges(v);
      std::size_t& k = cursor[v];
      while (k < nb.size() && used[ids[k]]) ++k;
      if (k < nb.size()) {
        used[ids[k]] = true;
        stack.push_back({nb[k], ids[k]});
      } else {
        const Step done = stack.back();
        stack.pop_back();
        circuit.walk.push_back(done.v);
        if (done.via != kStart) circuit.edges.push_back(done.via);
      }
    }
    // Vertices are emitted in reverse; the reversed walk is still a circuit
    // and edges[i] keeps joining walk[i] and walk[i + 1].
    out.push_back(std::move(circuit));
  }
  return out;
}

}  // namespace eventree
