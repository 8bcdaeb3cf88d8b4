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

#include "eventree/generator.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "eventree/error.hpp"

namespace eventree {

namespace {

std::string spec_text(const GenSpec& s) {
  return "n=" + std::to_string(s.n) + " r=" + std::to_string(s.r);
}

void check_feasible(const GenSpec& s) {
  auto infeasible = [&](const std::string& why) { throw Error(Errc::InfeasibleSpec, spec_text(s) + ": " + why); };
  if (s.n < 1 || s.r < 0) infeasible("need n >= 1 and r >= 0");
  if ((static_cast<long long>(s.n) * s.r) % 2 != 0) infeasible("n*r is odd");
  if (s.r >= s.n) infeasible("need r < n");
  if (s.connected && s.r == 0 && s.n > 1) infeasible("0-regular graph on several vertices is disconnected");
  if (s.nonbipartite && s.r <= 1) infeasible("every graph of degree <= 1 is bipartite");
  if (s.nonbipartite && s.connected && s.r == 2 && s.n % 2 == 0) infeasible("a connected 2-regular graph on even n is an even cycle");
}

bool meets(const GenSpec& s, const Graph& g) {
  if (s.connected && !is_connected(g)) return false;
  return !s.nonbipartite || !is_bipartite(g);
}

}  // namespace

Graph random_regular(const GenSpec& spec) {
  check_feasible(spec);
  std::mt19937_64 rng(spec.seed);
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(spec.r));
  for (Vertex v = 0; v < spec.n; ++v) points.insert(points.end(), static_cast<std::size_t>(spec.r), v);

  std::vector<Edge> edges;
  for (std::size_t attempt = 0; attempt <= spec.rejection_budget; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      if (points[i] == points[i + 1]) {
        simple = false;
        break;
      }
      edges.push_back(make_edge(points[i], points[i + 1]));
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Graph g = build_graph(spec.n, edges);
    if (meets(spec, g)) return g;
  }
  throw Error(Errc::RejectionBudgetExhausted,
              spec_text(spec) + ": no sample after " + std::to_string(spec.rejection_budget) + " rejections");
}

Graph figure1_graph() {
  std::vector<Edge> edges;
  for (Vertex k = 0; k < 3; ++k) {
    // Gadget vertices b1..b5 are 5k+1 .. 5k+5.
    const Vertex b = 5 * k;
    edges.push_back({0, b + 1});
    for (auto [x, y] : std::array<std::pair<Vertex, Vertex>, 7>{
             {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 5}, {3, 5}, {4, 5}}}) {
      edges.push_back({b + x, b + y});
    }
  }
  return build_graph(16, edges);
}

namespace {

Graph cycle_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return build_graph(n, edges);
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return build_graph(n, edges);
}

// Generalized Petersen graph GP(n, k): outer cycle, spokes, inner star polygon.
Graph generalized_petersen(Vertex n, Vertex k) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    edges.push_back(make_edge(i, (i + 1) % n));
    edges.push_back(make_edge(i, n + i));
    edges.push_back(make_edge(n + i, n + (i + k) % n));
  }
  return build_graph(2 * n, edges);
}

constexpr std::array<std::string_view, 13> kFixtures = {
    "k2", "c4", "c5", "c6", "k4", "k5", "k33", "prism", "cube", "wagner", "petersen", "moebius-kantor", "figure1"};

}  // namespace

std::span<const std::string_view> fixture_names() { return kFixtures; }

Graph fixture(std::string_view name) {
  if (name == "k2") return complete_graph(2);
  if (name == "c4") return cycle_graph(4);
  if (name == "c5") return cycle_graph(5);
  if (name == "c6") return cycle_graph(6);
  if (name == "k4") return complete_graph(4);
  if (name == "k5") return complete_graph(5);
  if (name == "k33") {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < 3; ++a) {
      for (Vertex b = 3; b < 6; ++b) edges.push_back({a, b});
    }
    return build_graph(6, edges);
  }
  if (name == "prism") {
    return build_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (name == "cube") {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < 8; ++v) {
      for (Vertex bit = 1; bit < 8; bit <<= 1) {
        if (v < (v ^ bit)) edges.push_back({v, v ^ bit});
      }
    }
    return build_graph(8, edges);
  }
  if (name == "wagner") {
    // Moebius ladder on 8 vertices: 8-cycle plus the four long diagonals.
    std::vector<Edge> edges;
    for (Vertex v = 0; v < 8; ++v) edges.push_back(make_edge(v, (v + 1) % 8));
    for (Vertex v = 0; v < 4; ++v) edges.push_back({v, v + 4});
    return build_graph(8, edges);
  }
  if (name == "petersen") return generalized_petersen(5, 2);
  if (name == "moebius-kantor") return generalized_petersen(8, 3);
  if (name == "figure1") return figure1_graph();
  throw Error(Errc::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

}  // namespace eventree
