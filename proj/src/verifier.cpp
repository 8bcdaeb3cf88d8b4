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

#include "eventree/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "eventree/error.hpp"

namespace eventree {

namespace {

std::string show(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

std::vector<Vertex> touched(std::span<const Edge> edges) {
  std::vector<Vertex> ids;
  ids.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// Compact adjacency over the vertices an edge list touches.
struct Compact {
  std::vector<Vertex> ids;
  std::vector<std::vector<std::size_t>> adj;

  explicit Compact(std::span<const Edge> edges) : ids(touched(edges)), adj(ids.size()) {
    for (const Edge& e : edges) {
      adj[index(e.u)].push_back(index(e.v));
      adj[index(e.v)].push_back(index(e.u));
    }
  }
  std::size_t index(Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  }
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Path between a and b in a forest given as compact adjacency.
std::vector<std::size_t> forest_path(const std::vector<std::vector<std::size_t>>& adj,
                                     std::size_t a, std::size_t b) {
  std::vector<std::size_t> parent(adj.size(), adj.size());
  std::queue<std::size_t> queue;
  parent[a] = a;
  queue.push(a);
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop();
    if (v == b) break;
    for (auto w : adj[v]) {
      if (parent[w] == adj.size()) {
        parent[w] = v;
        queue.push(w);
      }
    }
  }
  std::vector<std::size_t> path;
  for (auto v = b; v != a; v = parent[v]) path.push_back(v);
  path.push_back(a);
  return path;
}

}  // namespace

bool Certificate::overall() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Certificate::add(std::string name, bool passed, std::string witness) {
  checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
}

void Certificate::append(const Certificate& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Certificate::first_failure() const {
  for (const Check& c : checks) {
    if (!c.passed) return c.name + ": " + c.witness;
  }
  return {};
}

Certificate verify_tree(const Graph& g, std::span<const Edge> edges) {
  Certificate cert;

  std::string missing;
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) {
    if (missing.empty() && !g.has_edge(e.u, e.v)) missing = "edge " + show(e) + " is not in the graph";
    sorted.push_back(make_edge(e.u, e.v));
  }
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (missing.empty() && dup != sorted.end()) missing = "edge " + show(*dup) + " listed twice";
  cert.add("tree.edges_in_graph", missing.empty(), missing);

  Compact c(sorted);
  DisjointSets sets(c.ids.size());
  std::vector<std::vector<std::size_t>> forest(c.ids.size());
  std::string cycle;
  for (const Edge& e : sorted) {
    const auto a = c.index(e.u);
    const auto b = c.index(e.v);
    if (sets.unite(a, b)) {
      forest[a].push_back(b);
      forest[b].push_back(a);
    } else if (cycle.empty() && a != b) {
      std::ostringstream os;
      os << "cycle";
      for (auto v : forest_path(forest, a, b)) os << ' ' << c.ids[v];
      os << ' ' << c.ids[b];
      cycle = os.str();
    }
  }
  cert.add("tree.acyclic", cycle.empty(), cycle);

  std::string split;
  for (std::size_t i = 1; i < c.ids.size() && split.empty(); ++i) {
    if (sets.find(i) != sets.find(0)) {
      split = "vertices " + std::to_string(c.ids[0]) + " and " + std::to_string(c.ids[i]) +
              " are not connected";
    }
  }
  cert.add("tree.connected", split.empty(), split);
  return cert;
}

Certificate verify_even(std::span<const Edge> tree_edges) {
  Certificate cert;
  Compact c(tree_edges);
  if (c.ids.empty()) {
    cert.add("even.leaf_parity", true);
    return cert;
  }
  if (c.ids.size() != tree_edges.size() + 1) throw Error(Errc::NotATree, "edge and vertex counts disagree");
  std::vector<int> color(c.ids.size(), -1);
  std::vector<std::size_t> stack{0};
  color[0] = 0;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : c.adj[v]) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != c.ids.size()) throw Error(Errc::NotATree, "edges are disconnected");

  std::size_t first_leaf = c.ids.size();
  std::size_t odd_leaf = c.ids.size();
  for (std::size_t i = 0; i < c.ids.size(); ++i) {
    if (c.adj[i].size() != 1) continue;
    if (first_leaf == c.ids.size()) {
      first_leaf = i;
    } else if (color[i] != color[first_leaf]) {
      odd_leaf = i;
      break;
    }
  }
  std::string witness;
  if (odd_leaf != c.ids.size()) {
    const auto path = forest_path(c.adj, first_leaf, odd_leaf);
    witness = "leaves " + std::to_string(c.ids[first_leaf]) + " and " + std::to_string(c.ids[odd_leaf]) +
              " at odd distance " + std::to_string(path.size() - 1);
  }
  cert.add("even.leaf_parity", witness.empty(), witness);
  return cert;
}

Certificate verify_good_factor(const Graph& g, std::span<const Vertex> vertex_set, const Factor& f) {
  Certificate cert;
  const auto n = static_cast<std::size_t>(g.order());

  std::string shape;
  std::string outside_graph;
  std::vector<int> hits(n, 0);
  std::vector<int> degree(n, 0);
  std::string out_of_range;
  for (std::size_t k = 0; k < f.components.size() && out_of_range.empty(); ++k) {
    const FactorComponent& comp = f.components[k];
    const auto label = "component " + std::to_string(k);
    for (Vertex v : comp.ring) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        out_of_range = label + " names vertex " + std::to_string(v);
        break;
      }
    }
    if (!out_of_range.empty()) break;
    std::vector<Vertex> distinct(comp.ring);
    std::sort(distinct.begin(), distinct.end());
    const bool repeats = std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end();
    const bool sized = comp.is_cycle() ? comp.order() >= 3 : comp.order() == 2;
    if (shape.empty() && (repeats || !sized)) {
      shape = label + " is neither a single edge nor a cycle";
    }
    for (Vertex v : distinct) ++hits[v];
    if (!sized) continue;
    const std::size_t links = comp.is_cycle() ? comp.order() : 1;
    for (std::size_t i = 0; i < links; ++i) {
      const Vertex a = comp.ring[i];
      const Vertex b = comp.ring[(i + 1) % comp.order()];
      if (g.has_edge(a, b)) {
        ++degree[a];
        ++degree[b];
      } else if (outside_graph.empty()) {
        outside_graph = label + " uses non-edge " + show(make_edge(a, b));
        if (comp.is_cycle() && i + 1 == links) {
          outside_graph += " (vertices " + std::to_string(a) + " and " + std::to_string(b) +
                           " have degree 1: the component is a path)";
        }
      }
    }
  }
  cert.add("factor.vertices_in_range", out_of_range.empty(), out_of_range);
  cert.add("factor.component_shape", shape.empty(), shape);
  cert.add("factor.edges_in_graph", outside_graph.empty(), outside_graph);

  std::vector<bool> wanted(n, false);
  for (Vertex v : vertex_set) {
    if (v >= 0 && static_cast<std::size_t>(v) < n) wanted[v] = true;
  }
  std::string partition;
  for (std::size_t v = 0; v < n && partition.empty(); ++v) {
    if (wanted[v] && hits[v] == 0) partition = "vertex " + std::to_string(v) + " is uncovered";
    if (hits[v] > 1) partition = "vertex " + std::to_string(v) + " lies in " + std::to_string(hits[v]) + " components";
    if (!wanted[v] && hits[v] > 0) partition = "vertex " + std::to_string(v) + " is outside the target set";
  }
  cert.add("factor.partition", partition.empty(), partition);

  // Per-component regularity: every vertex of a single edge has degree 1,
  // every vertex of a cycle degree 2.
  std::string irregular;
  for (std::size_t k = 0; k < f.components.size() && irregular.empty() && out_of_range.empty(); ++k) {
    const FactorComponent& comp = f.components[k];
    const int want = comp.is_cycle() ? 2 : 1;
    for (Vertex v : comp.ring) {
      if (hits[v] == 1 && degree[v] != want) {
        irregular = "vertex " + std::to_string(v) + " has factor degree " + std::to_string(degree[v]) +
                    " in component " + std::to_string(k);
        break;
      }
    }
  }
  cert.add("factor.regular_components", irregular.empty(), irregular);
  return cert;
}

Certificate verify_good_even_tree(const Graph& g, const GoodEvenTree& t) {
  Certificate cert = verify_tree(g, t.edges);
  if (cert.overall()) {
    cert.append(verify_even(t.edges));
  } else {
    cert.add("even.leaf_parity", false, "not a tree");
  }

  std::vector<Vertex> in_tree = touched(t.edges);
  std::vector<Vertex> complement;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!std::binary_search(in_tree.begin(), in_tree.end(), v)) complement.push_back(v);
  }
  std::string overlap;
  for (const auto& comp : t.residual.components) {
    for (Vertex v : comp.ring) {
      if (overlap.empty() && std::binary_search(in_tree.begin(), in_tree.end(), v)) {
        overlap = "residual vertex " + std::to_string(v) + " is also a tree vertex";
      }
    }
  }
  cert.add("residual.disjoint_from_tree", overlap.empty(), overlap);
  cert.append(verify_good_factor(g, complement, t.residual));
  return cert;
}

Certificate verify_spanning_even_tree(const Graph& g, std::span<const Edge> edges) {
  Certificate cert = verify_tree(g, edges);
  if (cert.overall()) {
    cert.append(verify_even(edges));
  } else {
    cert.add("even.leaf_parity", false, "not a tree");
  }
  const auto ids = touched(edges);
  std::string gap;
  if (!(g.order() == 1 && edges.empty())) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!std::binary_search(ids.begin(), ids.end(), v)) {
        gap = "vertex " + std::to_string(v) + " is not covered (" + std::to_string(ids.size()) + " of " +
              std::to_string(g.order()) + " covered)";
        break;
      }
    }
  }
  cert.add("spanning.covers_all", gap.empty(), gap);
  return cert;
}

}  // namespace eventree
