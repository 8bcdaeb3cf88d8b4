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

#include "splice.hpp"

#include <algorithm>

#include "eventree/error.hpp"
#include "eventree/verifier.hpp"

namespace eventree::detail {

std::vector<std::size_t> chain_to(EntryTable entry, std::size_t c) {
  std::vector<std::size_t> chain{c};
  while (entry[c] && entry[c]->pred != kNoComponent) {
    c = entry[c]->pred;
    chain.push_back(c);
    if (chain.size() > entry.size()) {
      throw Error(Errc::SpliceInvariantViolation, "entry edges contain a cycle");
    }
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

void append_chain(const Factor& f, EntryTable entry, std::span<const std::size_t> chain,
                  Vertex last_vertex, Opening last_opening, std::vector<Edge>& out) {
  for (std::size_t h = 0; h < chain.size(); ++h) {
    const std::size_t c = chain[h];
    if (entry[c]) out.push_back(make_edge(entry[c]->from, entry[c]->to));
    const FactorComponent& comp = f.components[c];
    std::vector<Edge> opened;
    if (h + 1 < chain.size()) {
      const Vertex exit = entry[chain[h + 1]]->from;
      opened = component_minus(comp, e1_edges(exit, comp));
    } else if (last_opening == Opening::E1) {
      opened = component_minus(comp, e1_edges(last_vertex, comp));
    } else {
      opened = component_minus(comp, e2_edges(last_vertex, comp));
    }
    out.insert(out.end(), opened.begin(), opened.end());
  }
}

YYSplice splice_yy(const Factor& f, EntryTable entry, YYEdge yy) {
  auto chain_p = chain_to(entry, yy.p);
  auto chain_q = chain_to(entry, yy.q);
  auto on = [](const std::vector<std::size_t>& chain, std::size_t c) {
    return std::find(chain.begin(), chain.end(), c) != chain.end();
  };
  // With F_p strictly above F_q, opening F_p with e2(y_p) could cut the
  // branch toward F_q off; relabel so F_q is the one on the other's chain.
  if (yy.p != yy.q && on(chain_q, yy.p)) {
    std::swap(yy.p, yy.q);
    std::swap(yy.y_p, yy.y_q);
    std::swap(chain_p, chain_q);
  }

  YYSplice out;
  append_chain(f, entry, chain_p, yy.y_p, Opening::E2, out.edges);
  out.edges.push_back(make_edge(yy.y_p, yy.y_q));
  out.absorbed = chain_p;
  if (on(chain_p, yy.q)) {
    out.shared = true;
    return out;
  }

  // Deepest component of chain_q that also lies on chain_p (the branch point).
  std::size_t start = 0;
  for (std::size_t h = chain_q.size(); h-- > 0;) {
    if (on(chain_p, chain_q[h])) {
      start = h + 1;
      out.shared = true;
      break;
    }
  }
  const std::span<const std::size_t> branch(chain_q.data() + start, chain_q.size() - start);
  append_chain(f, entry, branch, yy.y_q, Opening::E1, out.edges);
  out.absorbed.insert(out.absorbed.end(), branch.begin(), branch.end());
  return out;
}

GoodEvenTree assemble(const Graph& g, const Factor& f, std::vector<Edge> edges,
                      std::span<const std::size_t> absorbed) {
  GoodEvenTree t;
  std::sort(edges.begin(), edges.end());
  t.edges = std::move(edges);
  std::vector<bool> gone(f.components.size(), false);
  for (std::size_t c : absorbed) gone[c] = true;
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    if (!gone[c]) t.residual.components.push_back(f.components[c]);
  }
  try {
    t.side = side_labels(g.order(), t.edges);
  } catch (const Error& e) {
    throw Error(Errc::SpliceInvariantViolation, e.what());
  }
  const Certificate cert = verify_good_even_tree(g, t);
  if (!cert.overall()) throw Error(Errc::SpliceInvariantViolation, cert.first_failure());
  return t;
}

}  // namespace eventree::detail
