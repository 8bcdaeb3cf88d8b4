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

#ifndef EVENTREE_TESTS_SUPPORT_HPP
#define EVENTREE_TESTS_SUPPORT_HPP

// Independent oracles for the unit tests. None of these call into the code
// they check; they trade speed for obviousness.

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <vector>

#include "eventree/graph.hpp"

namespace eventree::testing {

inline std::vector<std::vector<Vertex>> adjacency(Vertex n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

inline std::vector<Edge> edge_vector(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

inline int component_count(Vertex n, const std::vector<Edge>& edges) {
  const auto adj = adjacency(n, edges);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

// Edges whose deletion raises the component count.
inline std::vector<Edge> bridges_by_deletion(const Graph& g) {
  const auto all = edge_vector(g);
  const int base = component_count(g.order(), all);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto rest = all;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (component_count(g.order(), rest) > base) out.push_back(all[i]);
  }
  return out;
}

// Searches simple cycles by DFS from each start vertex for one of odd length.
inline bool has_odd_simple_cycle(const Graph& g) {
  const Vertex n = g.order();
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  bool found = false;
  std::function<void(Vertex, Vertex, int)> dfs = [&](Vertex start, Vertex v, int len) {
    if (found) return;
    for (Vertex w : g.neighbors(v)) {
      if (w == start && len >= 3 && len % 2 == 1) {
        found = true;
        return;
      }
      if (w > start && !on_path[w]) {
        on_path[w] = true;
        dfs(start, w, len + 1);
        on_path[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < n && !found; ++s) {
    on_path[s] = true;
    dfs(s, s, 1);
    on_path[s] = false;
  }
  return found;
}

inline std::vector<int> bfs_distances(const std::vector<std::vector<Vertex>>& adj, Vertex s) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<Vertex> queue;
  dist[s] = 0;
  queue.push(s);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

// Literal reading: every two degree-one vertices are an even distance apart.
inline bool leaves_pairwise_even(Vertex n, const std::vector<Edge>& tree) {
  const auto adj = adjacency(n, tree);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (adj[v].size() == 1) leaves.push_back(v);
  }
  for (Vertex a : leaves) {
    const auto dist = bfs_distances(adj, a);
    for (Vertex b : leaves) {
      if (dist[b] < 0 || dist[b] % 2 != 0) return false;
    }
  }
  return true;
}

// Spanning tree of g in the plain sense: n-1 distinct edges of g, connected.
inline bool is_spanning_tree(const Graph& g, const std::vector<Edge>& tree) {
  std::set<Edge> distinct;
  for (const Edge& e : tree) {
    if (!g.has_edge(e.u, e.v)) return false;
    distinct.insert(make_edge(e.u, e.v));
  }
  return distinct.size() == tree.size() && tree.size() + 1 == static_cast<std::size_t>(g.order()) &&
         component_count(g.order(), tree) == 1;
}

inline std::vector<int> degrees_in(Vertex n, const std::vector<Edge>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

inline Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return build_graph(n, edges);
}

inline Graph cycle_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return build_graph(n, edges);
}

inline Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return build_graph(n, edges);
}

}  // namespace eventree::testing

#endif  // EVENTREE_TESTS_SUPPORT_HPP
