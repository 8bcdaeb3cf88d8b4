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

#include "eventree/factor.hpp"

#include <algorithm>
#include <string>

#include "eventree/error.hpp"

namespace eventree {

FactorComponent FactorComponent::single_edge(Vertex a, Vertex b) {
  return {ComponentKind::SingleEdge, {std::min(a, b), std::max(a, b)}};
}

FactorComponent FactorComponent::cycle(std::vector<Vertex> ring) {
  if (ring.size() < 3) throw Error(Errc::BadFactor, "cycle needs at least 3 vertices");
  auto lowest = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), lowest, ring.end());
  if (ring[1] > ring.back()) std::reverse(ring.begin() + 1, ring.end());
  return {ComponentKind::Cycle, std::move(ring)};
}

bool FactorComponent::contains(Vertex v) const noexcept { return position(v) != npos; }

std::size_t FactorComponent::position(Vertex v) const noexcept {
  auto it = std::find(ring.begin(), ring.end(), v);
  return it == ring.end() ? npos : static_cast<std::size_t>(it - ring.begin());
}

std::vector<Vertex> FactorComponent::factor_neighbors(Vertex v) const {
  const std::size_t i = position(v);
  if (i == npos) {
    throw Error(Errc::VertexNotInComponent, "vertex " + std::to_string(v) + " not in component");
  }
  if (!is_cycle()) return {ring[1 - i]};
  const std::size_t k = ring.size();
  const Vertex a = ring[(i + k - 1) % k];
  const Vertex b = ring[(i + 1) % k];
  return {std::min(a, b), std::max(a, b)};
}

std::vector<Edge> FactorComponent::edges() const {
  if (!is_cycle()) return {make_edge(ring[0], ring[1])};
  std::vector<Edge> out;
  out.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    out.push_back(make_edge(ring[i], ring[(i + 1) % ring.size()]));
  }
  return out;
}

std::vector<Vertex> Factor::covered() const {
  std::vector<Vertex> out;
  for (const auto& c : components) out.insert(out.end(), c.ring.begin(), c.ring.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Factor::edges() const {
  std::vector<Edge> out;
  for (const auto& c : components) {
    auto e = c.edges();
    out.insert(out.end(), e.begin(), e.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Factor::has_cycle() const noexcept {
  return std::any_of(components.begin(), components.end(),
                     [](const FactorComponent& c) { return c.is_cycle(); });
}

FactorCensus Factor::census() const noexcept {
  FactorCensus out;
  for (const auto& c : components) {
    if (!c.is_cycle()) {
      ++out.single_edges;
    } else if (c.is_odd_cycle()) {
      ++out.odd_cycles;
    } else {
      ++out.even_cycles;
    }
  }
  return out;
}

void canonicalize(Factor& f) {
  std::sort(f.components.begin(), f.components.end(),
            [](const FactorComponent& a, const FactorComponent& b) {
              return a.min_vertex() < b.min_vertex();
            });
}

Factor factor_from_successor(std::span<const Vertex> successor) {
  const auto n = successor.size();
  std::vector<bool> seen(n, false);
  Factor f;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || successor[s] == kNoVertex) continue;
    std::vector<Vertex> ring;
    auto v = static_cast<Vertex>(s);
    while (!seen[v]) {
      seen[v] = true;
      ring.push_back(v);
      v = successor[v];
      if (v == kNoVertex) throw Error(Errc::BadFactor, "successor chain is not a permutation");
    }
    if (v != static_cast<Vertex>(s)) throw Error(Errc::BadFactor, "successor is not a permutation");
    if (ring.size() == 1) throw Error(Errc::BadFactor, "fixed point at " + std::to_string(s));
    if (ring.size() == 2) {
      f.components.push_back(FactorComponent::single_edge(ring[0], ring[1]));
    } else {
      f.components.push_back(FactorComponent::cycle(std::move(ring)));
    }
  }
  canonicalize(f);
  return f;
}

std::size_t BipartiteCover::arc_count() const noexcept {
  std::size_t total = 0;
  for (const auto& arcs : left) total += arcs.size();
  return total;
}

BipartiteCover bipartite_double_cover(const Graph& g) {
  BipartiteCover cover;
  cover.n = g.order();
  cover.left.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    auto ids = g.incident_edges(v);
    cover.left[v].reserve(nb.size());
    for (std::size_t k = 0; k < nb.size(); ++k) cover.left[v].push_back({nb[k], ids[k]});
  }
  return cover;
}

Factor good_12_factor(const Graph& g) {
  const auto r = degree_profile(g);
  if (!r || *r < 1) throw Error(Errc::NotRegular, "good_12_factor needs an r-regular graph, r >= 1");
  const CoverMatching m = max_bipartite_matching(bipartite_double_cover(g));
  if (!m.perfect()) {
    // Cannot happen for a regular cover (König); kept loud.
    throw Error(Errc::BadFactor, "double cover of a regular graph has no perfect matching");
  }
  return factor_from_successor(m.mate);
}

namespace {

bool is_good_factor_of(const Graph& g, const Factor& f) {
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (const auto& c : f.components) {
    if (c.order() < 2 || (c.is_cycle() && c.order() < 3)) return false;
    for (Vertex v : c.ring) {
      if (v < 0 || v >= g.order() || hits[v]++ > 0) return false;
    }
    for (const Edge& e : c.edges()) {
      if (!g.has_edge(e.u, e.v)) return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace

Factor petersen_two_factor(const Graph& g) {
  const auto r = degree_profile(g);
  if (!r || *r < 2 || *r % 2 != 0) {
    throw Error(Errc::NotEvenRegular, "petersen_two_factor needs a 2k-regular graph, k >= 1");
  }
  // Orient every edge along an Euler circuit; each vertex then has k out-arcs
  // and k in-arcs, so the out/in bipartite graph is k-regular.
  BipartiteCover oriented;
  oriented.n = g.order();
  oriented.left.resize(static_cast<std::size_t>(g.order()));
  for (const EulerCircuit& circuit : euler_circuits(g)) {
    for (std::size_t i = 0; i < circuit.edges.size(); ++i) {
      oriented.left[circuit.walk[i]].push_back({circuit.walk[i + 1], circuit.edges[i]});
    }
  }
  for (auto& arcs : oriented.left) {
    std::sort(arcs.begin(), arcs.end(),
              [](const CoverArc& a, const CoverArc& b) { return a.right < b.right; });
  }
  const CoverMatching m = max_bipartite_matching(oriented);
  if (!m.perfect()) throw Error(Errc::BadFactor, "oriented k-regular graph has no perfect matching");
  // A simple graph orients each edge once, so the successor has no 2-cycles.
  return factor_from_successor(m.mate);
}

Factor ensure_cycle_component(const Graph& g, Factor f) {
  const auto r = degree_profile(g);
  if (!r || *r % 2 == 0) throw Error(Errc::NotOddRegular, "ensure_cycle_component needs odd r");
  if (!is_good_factor_of(g, f)) throw Error(Errc::BadFactor, "input is not a good {1,2}-factor of g");
  if (f.has_cycle()) return f;
  // Without a cycle, f is a perfect matching and g - E(f) is (r-1)-regular.
  const auto matching = f.edges();
  return petersen_two_factor(without_edges(g, matching));
}

}  // namespace eventree
