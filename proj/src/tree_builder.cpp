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

#include "eventree/tree_builder.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "eventree/error.hpp"
#include "splice.hpp"

namespace eventree {

std::vector<Edge> e1_edges(Vertex v, const FactorComponent& comp) {
  const auto nbrs = comp.factor_neighbors(v);
  if (!comp.is_cycle()) return {};
  return {make_edge(v, std::min(nbrs[0], nbrs[1]))};
}

std::vector<Edge> e2_edges(Vertex v, const FactorComponent& comp) {
  const auto nbrs = comp.factor_neighbors(v);
  std::vector<Edge> out;
  for (Vertex w : nbrs) out.push_back(make_edge(v, w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> component_minus(const FactorComponent& comp, std::span<const Edge> removed) {
  std::vector<Edge> out;
  for (const Edge& e : comp.edges()) {
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) out.push_back(e);
  }
  return out;
}

ComponentBipartition::ComponentBipartition(const Factor& f, Vertex n)
    : comp_of_(static_cast<std::size_t>(n), kNoComponent),
      in_y_(static_cast<std::size_t>(n), 0),
      members_(f.components.size()) {
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    const auto& ring = f.components[c].ring;
    members_[c] = ring;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      comp_of_[ring[i]] = c;
      in_y_[ring[i]] = static_cast<std::uint8_t>(i % 2);
    }
  }
}

void ComponentBipartition::flip(std::size_t comp) {
  for (Vertex v : members_[comp]) in_y_[v] ^= 1U;
}

void ComponentBipartition::orient(std::size_t comp, Vertex v) {
  if (in_y(v)) flip(comp);
}

std::vector<Vertex> ComponentBipartition::x_side(std::size_t comp) const {
  std::vector<Vertex> out;
  for (Vertex v : members_[comp]) {
    if (!in_y(v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> ComponentBipartition::y_side(std::size_t comp) const {
  std::vector<Vertex> out;
  for (Vertex v : members_[comp]) {
    if (in_y(v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GoodState GoodState::start(const Factor& f, std::size_t root) {
  GoodState s;
  s.root = root;
  s.good = {root};
  s.is_good.assign(f.components.size(), false);
  s.is_good[root] = true;
  s.entry.assign(f.components.size(), std::nullopt);
  return s;
}

GoodEvenTree tree_from_odd_cycle(Vertex n, const Factor& f, std::size_t i) {
  if (i >= f.components.size() || !f.components[i].is_odd_cycle()) {
    throw Error(Errc::NotOddCycle, "component " + std::to_string(i) + " is not an odd cycle");
  }
  const FactorComponent& cycle = f.components[i];
  GoodEvenTree t;
  t.edges = component_minus(cycle, e1_edges(cycle.min_vertex(), cycle));
  std::sort(t.edges.begin(), t.edges.end());
  t.side = side_labels(n, t.edges);
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    if (c != i) t.residual.components.push_back(f.components[c]);
  }
  return t;
}

Edge find_escape_edge(const Graph& g, std::span<const Vertex> y_set, std::span<const Vertex> x_set) {
  if (x_set.size() > y_set.size()) {
    throw Error(Errc::LemmaViolation, "precondition |X| <= |Y| fails");
  }
  // 0 = elsewhere, 1 = in Y, 2 = in X
  std::vector<std::uint8_t> where(static_cast<std::size_t>(g.order()), 0);
  for (Vertex y : y_set) where[y] = 1;
  for (Vertex x : x_set) {
    if (where[x] == 1) throw Error(Errc::LemmaViolation, "X and Y share vertex " + std::to_string(x));
    where[x] = 2;
  }
  std::optional<Edge> found;
  for (Vertex y : y_set) {
    for (Vertex w : g.neighbors(y)) {
      if (where[w] == 1) {
        throw Error(Errc::LemmaViolation, "Y is not independent: edge " + std::to_string(y) + "-" +
                                              std::to_string(w));
      }
      if (where[w] == 0 && !found) found = Edge{y, w};
    }
  }
  if (!found) {
    throw Error(Errc::LemmaViolation, "no edge leaves Y outside X (|Y| = " + std::to_string(y_set.size()) +
                                          ", |X| = " + std::to_string(x_set.size()) + ")");
  }
  return *found;
}

GrowOutcome grow_good_set(const Graph& g, const Factor& f, ComponentBipartition& bip, GoodState& state) {
  for (const auto& comp : f.components) {
    if (!comp.is_balanced()) throw Error(Errc::BadFactor, "grow_good_set needs a factor without odd cycles");
  }
  GrowOutcome out;
  std::deque<std::size_t> to_scan(state.good.begin(), state.good.end());
  std::deque<Edge> frontier;  // (y in a good Y side, v in a component that was not good yet)

  for (;;) {
    while (!to_scan.empty()) {
      const std::size_t c = to_scan.front();
      to_scan.pop_front();
      for (Vertex y : bip.y_side(c)) {
        for (Vertex w : g.neighbors(y)) {
          const std::size_t cw = bip.component_of(w);
          if (state.is_good[cw]) {
            if (bip.in_y(w)) {
              out.edge = {y, w, c, cw};
              return out;
            }
          } else {
            frontier.push_back({y, w});
          }
        }
      }
    }

    while (!frontier.empty() && state.is_good[bip.component_of(frontier.front().v)]) frontier.pop_front();
    Edge escape;
    if (!frontier.empty()) {
      escape = frontier.front();
      frontier.pop_front();
    } else {
      // Every good Y vertex only sees good X vertices; the lemma says this
      // cannot happen, so this call reports the violation.
      std::vector<Vertex> ys;
      std::vector<Vertex> xs;
      for (std::size_t c : state.good) {
        auto y = bip.y_side(c);
        auto x = bip.x_side(c);
        ys.insert(ys.end(), y.begin(), y.end());
        xs.insert(xs.end(), x.begin(), x.end());
      }
      escape = find_escape_edge(g, ys, xs);
    }

    const std::size_t j = bip.component_of(escape.v);
    bip.orient(j, escape.v);
    state.entry[j] = EntryEdge{escape.u, escape.v, bip.component_of(escape.u)};
    state.is_good[j] = true;
    state.good.push_back(j);
    to_scan.push_back(j);
    ++out.flips;
  }
}

GoodEvenTree splice_case2(const Graph& g, const Factor& f, const ComponentBipartition& bip,
                          const GoodState& state, const YYEdge& yy) {
  if (!state.is_good[yy.p] || !state.is_good[yy.q] || !bip.in_y(yy.y_p) || !bip.in_y(yy.y_q) ||
      !g.has_edge(yy.y_p, yy.y_q)) {
    throw Error(Errc::SpliceInvariantViolation, "edge is not a YY edge between good components");
  }
  const detail::YYSplice s = detail::splice_yy(f, state.entry, yy);
  return detail::assemble(g, f, s.edges, s.absorbed);
}

GoodEvenTree build_good_even_tree(const Graph& g, const Factor& f, GoodTreeTrace* trace) {
  GoodTreeTrace local;
  GoodTreeTrace& tr = trace != nullptr ? *trace : local;

  for (std::size_t c = 0; c < f.components.size(); ++c) {
    if (f.components[c].is_odd_cycle()) {
      tr.odd_cycle_shortcut = true;
      tr.root = c;
      return tree_from_odd_cycle(g.order(), f, c);
    }
  }
  auto first_cycle = std::find_if(f.components.begin(), f.components.end(),
                                  [](const FactorComponent& c) { return c.is_cycle(); });
  if (first_cycle == f.components.end()) throw Error(Errc::BadFactor, "factor has no cycle component");
  tr.root = static_cast<std::size_t>(first_cycle - f.components.begin());

  ComponentBipartition bip(f, g.order());
  GoodState state = GoodState::start(f, tr.root);
  const GrowOutcome grown = grow_good_set(g, f, bip, state);
  tr.flips = grown.flips;
  tr.yy = grown.edge;
  const auto chain_p = detail::chain_to(state.entry, grown.edge.p);
  const auto chain_q = detail::chain_to(state.entry, grown.edge.q);
  tr.branched = std::find(chain_p.begin(), chain_p.end(), grown.edge.q) == chain_p.end() &&
                std::find(chain_q.begin(), chain_q.end(), grown.edge.p) == chain_q.end();
  return splice_case2(g, f, bip, state, grown.edge);
}

int check_preconditions(const Graph& g) {
  const auto r = degree_profile(g);
  if (!r) throw Error(Errc::NotRegular, "graph is not regular");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is not connected");
  if (two_color(g).bipartite()) throw Error(Errc::Bipartite, "graph is bipartite");
  return *r;
}

Factor starting_factor(const Graph& g) {
  const int r = check_preconditions(g);
  if (r % 2 == 0) return petersen_two_factor(g);
  return ensure_cycle_component(g, good_12_factor(g));
}

GoodEvenTree build_good_even_tree(const Graph& g) {
  return build_good_even_tree(g, starting_factor(g));
}

}  // namespace eventree
