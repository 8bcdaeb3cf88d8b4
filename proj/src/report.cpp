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

#include "eventree/report.hpp"

#include <chrono>
#include <sstream>

#include "eventree/even_tree.hpp"
#include "eventree/generator.hpp"

namespace eventree {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json component_json(const FactorComponent& c) {
  Json out;
  out["kind"] = c.is_cycle() ? (c.is_odd_cycle() ? "oddCycle" : "evenCycle") : "edge";
  out["vertices"] = c.ring;
  return out;
}

}  // namespace

InputSummary summarize(const Graph& g, std::string source) {
  InputSummary s;
  s.source = std::move(source);
  s.n = g.order();
  s.m = g.size();
  s.r = degree_profile(g);
  s.connected = is_connected(g);
  s.nonbipartite = !is_bipartite(g);
  s.bridges = bridges(g);
  return s;
}

RunReport run_solve(const Graph& g, std::string source, const SolveOptions& options) {
  RunReport report;
  report.input = summarize(g, std::move(source));

  auto t = Clock::now();
  const Factor f = starting_factor(g);
  report.census = f.census();
  report.timings.factor_ms = ms_since(t);

  t = Clock::now();
  GoodEvenTree start = build_good_even_tree(g, f, &report.good_tree);
  report.good_tree_vertices = start.vertex_count();
  report.timings.good_tree_ms = ms_since(t);

  t = Clock::now();
  SpanningResult result = extend_to_spanning(g, std::move(start), SpannerOptions{options.verify_all});
  report.timings.spanning_ms = ms_since(t);
  report.initial_residual_components = result.initial_residual_components;
  report.steps = std::move(result.steps);
  report.tree = std::move(result.edges);

  t = Clock::now();
  report.certificate = verify_spanning_even_tree(g, report.tree);
  report.timings.verify_ms = ms_since(t);
  if (report.certificate.overall()) report.side = side_labels(g.order(), report.tree);
  return report;
}

Json certificate_json(const Certificate& cert) {
  Json out;
  out["overall"] = cert.overall() ? "pass" : "fail";
  Json checks = Json::array();
  for (const Check& c : cert.checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.passed) j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json report_json(const RunReport& report, bool with_timings) {
  Json out;
  const InputSummary& in = report.input;
  out["input"] = {
      {"source", in.source},
      {"n", in.n},
      {"m", in.m},
      {"r", in.r ? Json(*in.r) : Json(nullptr)},
      {"connected", in.connected},
      {"nonbipartite", in.nonbipartite},
      {"bridges", edges_json(in.bridges)},
  };
  if (with_timings) {
    out["timings"] = {
        {"factorMs", report.timings.factor_ms},
        {"goodTreeMs", report.timings.good_tree_ms},
        {"spanningMs", report.timings.spanning_ms},
        {"verifyMs", report.timings.verify_ms},
    };
  }
  out["factor"] = {
      {"singleEdges", report.census.single_edges},
      {"evenCycles", report.census.even_cycles},
      {"oddCycles", report.census.odd_cycles},
  };
  Json good;
  good["oddCycleShortcut"] = report.good_tree.odd_cycle_shortcut;
  good["vertices"] = report.good_tree_vertices;
  good["flips"] = report.good_tree.flips;
  if (report.good_tree.yy) {
    good["yyEdge"] = {report.good_tree.yy->y_p, report.good_tree.yy->y_q};
    good["branched"] = report.good_tree.branched;
  }
  out["goodTree"] = std::move(good);

  Json steps = Json::array();
  for (const AugmentationStep& s : report.steps) {
    Json j;
    j["kind"] = std::string(to_string(s.kind));
    Json absorbed = Json::array();
    for (const auto& c : s.absorbed) absorbed.push_back(component_json(c));
    j["absorbed"] = std::move(absorbed);
    j["added"] = edges_json(s.added);
    j["removed"] = edges_json(s.removed);
    j["treeVerticesAfter"] = s.tree_vertices_after;
    steps.push_back(std::move(j));
  }
  out["augmentation"] = {
      {"initialResidualComponents", report.initial_residual_components},
      {"iterations", report.steps.size()},
      {"steps", std::move(steps)},
  };

  Json leaves = Json::array();
  for (std::size_t v = 0; v < report.side.size(); ++v) {
    if (report.side[v] == kLeafSide) leaves.push_back(v);
  }
  out["tree"] = {
      {"edgeCount", report.tree.size()},
      {"edges", edges_json(report.tree)},
      {"leafSide", std::move(leaves)},
  };
  out["certificate"] = certificate_json(report.certificate);
  return out;
}

Json error_json(const Error& e) {
  Json out;
  out["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  return out;
}

std::string tree_dot(const std::vector<Edge>& tree, const std::vector<std::int8_t>& side) {
  std::vector<int> degree(side.size(), 0);
  for (const Edge& e : tree) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::ostringstream out;
  out << "graph even_tree {\n";
  out << "  node [shape=circle, style=filled];\n";
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v] == kOutside) continue;
    const bool leaf_side = side[v] == kLeafSide;
    out << "  " << v << " [side=\"" << (leaf_side ? "leaf" : "inner") << "\", fillcolor=\""
        << (leaf_side ? "#9ecae1" : "#fdd0a2") << "\"";
    if (degree[v] == 1) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const Edge& e : tree) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

OracleReport run_oracle(const Graph& g) {
  OracleReport report;
  report.witness = brute_force_even_spanning_tree(g);
  report.even_spanning_tree = report.witness.has_value();
  report.two_factor = brute_force_two_factor_exists(g);
  return report;
}

Json oracle_json(const OracleReport& report) {
  Json out;
  out["evenSpanningTree"] = report.even_spanning_tree;
  out["twoFactor"] = report.two_factor;
  if (report.witness) out["witness"] = edges_json(*report.witness);
  return out;
}

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError:
    case Errc::LoopEdge:
    case Errc::ParallelEdge:
    case Errc::VertexOutOfRange: return kExitParse;
    case Errc::NotRegular: return kExitNotRegular;
    case Errc::Bipartite: return kExitBipartite;
    case Errc::Disconnected: return kExitDisconnected;
    case Errc::InfeasibleSpec: return kExitInfeasible;
    case Errc::RejectionBudgetExhausted: return kExitRejectionBudget;
    case Errc::BudgetExceeded: return kExitBudgetExceeded;
    case Errc::UnknownFixture: return kExitUnknownFixture;
    case Errc::IoError: return kExitIo;
    case Errc::NotEvenTree:
    case Errc::NotATree: return kExitVerifyFailed;
    default: return kExitInternal;
  }
}

}  // namespace eventree
