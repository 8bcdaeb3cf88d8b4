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

#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "eventree/error.hpp"
#include "eventree/generator.hpp"

namespace eventree {

namespace {

constexpr Vertex kTreeBudget = 12;
// Larger graphs are still enumerated when they have few spanning trees.
constexpr long double kTreeCountBudget = 5e6L;
constexpr Vertex kTreeCountMaxOrder = 64;
constexpr Vertex kTwoFactorBudget = 20;

using Parents = std::vector<Vertex>;

Vertex find(Parents& p, Vertex x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

// Literal definition: every pair of degree-one vertices is joined by a path
// of even length. Deliberately not the 2-coloring shortcut.
bool leaves_pairwise_even(Vertex n, const std::vector<Edge>& tree) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : tree) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (adj[v].size() == 1) leaves.push_back(v);
  }
  for (Vertex s : leaves) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
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
    for (Vertex t : leaves) {
      if (dist[t] % 2 != 0) return false;
    }
  }
  return true;
}

// Include/exclude branching over the edge list. Including an edge contracts
// its endpoints; excluding it deletes it, allowed only while the rest can
// still connect everything. `visit` returns true to stop.
class SpanningTreeEnumerator {
 public:
  SpanningTreeEnumerator(const Graph& g, std::function<bool(const std::vector<Edge>&)> visit)
      : g_(g), edges_(g.edges().begin(), g.edges().end()), visit_(std::move(visit)) {}

  void run() {
    if (g_.order() == 0) return;
    Parents p(static_cast<std::size_t>(g_.order()));
    std::iota(p.begin(), p.end(), 0);
    if (!still_connects(p, 0)) return;
    recurse(0, p);
  }

 private:
  bool still_connects(Parents p, std::size_t from) const {
    for (std::size_t i = from; i < edges_.size(); ++i) {
      Vertex a = find(p, edges_[i].u);
      Vertex b = find(p, edges_[i].v);
      if (a != b) p[b] = a;
    }
    const Vertex root = find(p, 0);
    for (Vertex v = 1; v < g_.order(); ++v) {
      if (find(p, v) != root) return false;
    }
    return true;
  }

  bool recurse(std::size_t i, Parents& p) {
    if (chosen_.size() + 1 == static_cast<std::size_t>(g_.order())) return visit_(chosen_);
    if (i == edges_.size()) return false;
    const Edge e = edges_[i];
    const Vertex a = find(p, e.u);
    const Vertex b = find(p, e.v);
    if (a != b) {
      Parents next = p;
      next[b] = a;
      chosen_.push_back(e);
      const bool stop = recurse(i + 1, next);
      chosen_.pop_back();
      if (stop) return true;
    }
    if (still_connects(p, i + 1)) return recurse(i + 1, p);
    return false;
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::function<bool(const std::vector<Edge>&)> visit_;
  std::vector<Edge> chosen_;
};

// Determinant of the reduced Laplacian, by elimination with partial pivoting.
long double kirchhoff_estimate(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  if (n <= 1) return 1;
  const std::size_t k = n - 1;
  std::vector<long double> a(k * k, 0);
  for (const Edge& e : g.edges()) {
    for (Vertex v : {e.u, e.v}) {
      if (v < g.order() - 1) a[v * k + v] += 1;
    }
    if (e.v < g.order() - 1) {
      a[e.u * k + e.v] -= 1;
      a[e.v * k + e.u] -= 1;
    }
  }
  long double det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (std::fabs(a[r * k + c]) > std::fabs(a[pivot * k + c])) pivot = r;
    }
    if (std::fabs(a[pivot * k + c]) < 1e-12L) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a[c * k + j], a[pivot * k + j]);
      det = -det;
    }
    det *= a[c * k + c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const long double factor = a[r * k + c] / a[c * k + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < k; ++j) a[r * k + j] -= factor * a[c * k + j];
    }
  }
  return std::fabs(det);
}

[[noreturn]] void over_budget(const Graph& g, const std::string& limit, const char* what) {
  throw Error(Errc::BudgetExceeded, std::string(what) + " is limited to " + limit + " (got n=" +
                                        std::to_string(g.order()) + ")");
}

void check_tree_budget(const Graph& g) {
  if (g.order() <= kTreeBudget) return;
  const std::string limit = "n <= " + std::to_string(kTreeBudget) + " or at most 5e6 spanning trees";
  if (g.order() > kTreeCountMaxOrder) over_budget(g, limit, "spanning-tree enumeration");
  if (kirchhoff_estimate(g) > kTreeCountBudget) over_budget(g, limit, "spanning-tree enumeration");
}

}  // namespace

std::optional<std::vector<Edge>> brute_force_even_spanning_tree(const Graph& g) {
  check_tree_budget(g);
  std::optional<std::vector<Edge>> found;
  SpanningTreeEnumerator(g, [&](const std::vector<Edge>& tree) {
    if (!leaves_pairwise_even(g.order(), tree)) return false;
    found = tree;
    return true;
  }).run();
  return found;
}

std::uint64_t count_spanning_trees(const Graph& g) {
  check_tree_budget(g);
  std::uint64_t count = 0;
  SpanningTreeEnumerator(g, [&](const std::vector<Edge>&) {
    ++count;
    return false;
  }).run();
  return count;
}

bool brute_force_two_factor_exists(const Graph& g) {
  if (g.order() > kTwoFactorBudget) over_budget(g, "n <= " + std::to_string(kTwoFactorBudget), "2-factor search");
  const auto n = static_cast<std::size_t>(g.order());
  if (n == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) return false;
  }
  const auto edges = g.edges();
  // Index of the last edge touching each vertex: its degree is final there.
  std::vector<std::size_t> last(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    last[edges[i].u] = i;
    last[edges[i].v] = i;
  }
  std::vector<int> deg(n, 0);
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == edges.size()) return true;
    const Edge e = edges[i];
    auto settled = [&]() {
      return (last[e.u] != i || deg[e.u] == 2) && (last[e.v] != i || deg[e.v] == 2);
    };
    if (deg[e.u] < 2 && deg[e.v] < 2) {
      ++deg[e.u];
      ++deg[e.v];
      const bool ok = settled() && search(i + 1);
      --deg[e.u];
      --deg[e.v];
      if (ok) return true;
    }
    return settled() && search(i + 1);
  };
  return search(0);
}

}  // namespace eventree
