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

#include <limits>
#include <queue>

#include "eventree/factor.hpp"

namespace eventree {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteCover& cover)
      : cover_(cover),
        n_(static_cast<std::size_t>(cover.n)),
        mate_left_(n_, kNoVertex),
        mate_right_(n_, kNoVertex),
        arc_left_(n_, 0),
        dist_(n_, kInf),
        cursor_(n_, 0) {}

  CoverMatching run() {
    std::size_t size = 0;
    while (layer()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (std::size_t u = 0; u < n_; ++u) {
        if (mate_left_[u] == kNoVertex && augment(static_cast<Vertex>(u))) ++size;
      }
    }
    CoverMatching out;
    out.size = size;
    out.mate = mate_left_;
    out.edge.assign(n_, 0);
    for (std::size_t u = 0; u < n_; ++u) {
      if (mate_left_[u] != kNoVertex) out.edge[u] = cover_.left[u][arc_left_[u]].edge;
    }
    return out;
  }

 private:
  // BFS from all free left vertices; true if some free right vertex is reachable.
  bool layer() {
    std::queue<Vertex> queue;
    for (std::size_t u = 0; u < n_; ++u) {
      if (mate_left_[u] == kNoVertex) {
        dist_[u] = 0;
        queue.push(static_cast<Vertex>(u));
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (const CoverArc& arc : cover_.left[u]) {
        const Vertex w = mate_right_[arc.right];
        if (w == kNoVertex) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  // Depth is bounded by the BFS layer count.
  bool augment(Vertex u) {
    const auto& arcs = cover_.left[u];
    for (std::size_t& k = cursor_[u]; k < arcs.size(); ++k) {
      const Vertex right = arcs[k].right;
      const Vertex w = mate_right_[right];
      if (w == kNoVertex || (dist_[w] == dist_[u] + 1 && augment(w))) {
        mate_left_[u] = right;
        mate_right_[right] = u;
        arc_left_[u] = k;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteCover& cover_;
  std::size_t n_;
  std::vector<Vertex> mate_left_;
  std::vector<Vertex> mate_right_;
  std::vector<std::size_t> arc_left_;
  std::vector<int> dist_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

CoverMatching max_bipartite_matching(const BipartiteCover& cover) {
  return HopcroftKarp(cover).run();
}

}  // namespace eventree
