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

#include "eventree/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "eventree/error.hpp"

namespace eventree {

namespace {

std::string edge_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  return edge_index(a, b).has_value();
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const noexcept {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

Graph build_graph(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw Error(Errc::VertexOutOfRange, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(Errc::VertexOutOfRange, "edge " + edge_text(e.u, e.v) +
                                              " outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(Errc::ParallelEdge, "duplicate edge " + edge_text(dup->u, dup->v));
  }

  std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.nbrs_.resize(2 * g.edges_.size());
  g.nbr_edges_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted, so for each vertex the neighbors arrive ascending:
  // smaller neighbors come from edges (w, v) with w < v, which precede (v, x).
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    g.nbrs_[fill[e.u]] = e.v;
    g.nbr_edges_[fill[e.u]++] = i;
    g.nbrs_[fill[e.v]] = e.u;
    g.nbr_edges_[fill[e.v]++] = i;
  }
  return g;
}

Graph without_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (Edge& e : drop) e = make_edge(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(g.size());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return build_graph(g.order(), kept);
}

std::optional<int> degree_profile(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int r = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count == 1;
}

TwoColoring two_color(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "two_color needs a connected graph");
  const auto n = static_cast<std::size_t>(g.order());
  TwoColoring out;
  out.color.assign(n, 0);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<int> depth(n, -1);
  std::queue<Vertex> queue;
  depth[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        out.color[w] = static_cast<std::uint8_t>(1 - out.color[v]);
        queue.push(w);
      } else if (out.color[w] == out.color[v] && !out.odd_cycle) {
        // Both BFS-tree paths climb to the common ancestor; together with
        // the conflicting edge they close an odd cycle.
        std::vector<Vertex> up_v{v};
        std::vector<Vertex> up_w{w};
        Vertex a = v;
        Vertex b = w;
        while (a != b) {
          if (depth[a] >= depth[b]) {
            a = parent[a];
            up_v.push_back(a);
          } else {
            b = parent[b];
            up_w.push_back(b);
          }
        }
        up_w.pop_back();  // common ancestor already ends up_v
        std::vector<Vertex> cycle(up_v.begin(), up_v.end());
        cycle.insert(cycle.end(), up_w.rbegin(), up_w.rend());
        out.odd_cycle = std::move(cycle);
      }
    }
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Edge> bridges(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> out;
  int timer = 0;

  struct Frame {
    Vertex v;
    std::size_t parent_edge;
    std::size_t next;
  };
  constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);
  std::vector<Frame> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, kNoEdge, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      auto ids = g.incident_edges(f.v);
      if (f.next < nb.size()) {
        const std::size_t k = f.next++;
        const Vertex w = nb[k];
        if (ids[k] == f.parent_edge) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, ids[k], 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const Vertex p = stack.back().v;
        low[p] = std::min(low[p], low[done.v]);
        if (low[done.v] > disc[p]) out.push_back(make_edge(p, done.v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eventree
