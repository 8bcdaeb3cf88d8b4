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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eventree/error.hpp"
#include "eventree/factor.hpp"
#include "eventree/generator.hpp"
#include "eventree/report.hpp"
#include "eventree/spanner.hpp"
#include "eventree/verifier.hpp"
#include "support.hpp"

#ifndef EVENTREE_CLI
#error "EVENTREE_CLI must name the CLI binary"
#endif

using namespace eventree;
using namespace eventree::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Tally {
  long runs = 0;
  long failures = 0;
  std::string first;

  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0 && runs > 0; }
};

// Counted across every solve in the suite (criterion 7).
long g_lemma_violations = 0;
long g_gated_solves = 0;
// Per-step monotonicity and iteration bounds (criterion 6).
Tally g_progress;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string tag(const GenSpec& s) {
  return "n=" + std::to_string(s.n) + " r=" + std::to_string(s.r) + " seed=" + std::to_string(s.seed);
}

void record_progress(const RunReport& rep, const std::string& label) {
  ++g_progress.runs;
  if (rep.steps.size() > rep.initial_residual_components) g_progress.fail(label + ": too many iterations");
  std::size_t prev = rep.good_tree_vertices;
  for (const AugmentationStep& s : rep.steps) {
    if (s.tree_vertices_after <= prev) g_progress.fail(label + ": tree did not grow");
    prev = s.tree_vertices_after;
  }
}

// Solve through the library entry point the CLI uses, then re-check with
// the verifier and with the brute-force predicates from the test oracles.
std::optional<RunReport> solve_checked(const Graph& g, const std::string& label, Tally& t, bool verify_all,
                                       double* elapsed_ms = nullptr) {
  ++t.runs;
  ++g_gated_solves;
  try {
    const auto t0 = Clock::now();
    RunReport rep = run_solve(g, label, SolveOptions{verify_all});
    if (elapsed_ms) *elapsed_ms = ms_since(t0);
    if (!rep.certificate.overall()) {
      t.fail(label + ": " + rep.certificate.first_failure());
      return std::nullopt;
    }
    if (!verify_spanning_even_tree(g, rep.tree).overall() || !is_spanning_tree(g, rep.tree) ||
        !leaves_pairwise_even(g.order(), rep.tree)) {
      t.fail(label + ": independent check rejected the tree");
      return std::nullopt;
    }
    if (verify_all) record_progress(rep, label);
    return rep;
  } catch (const Error& e) {
    if (e.code() == Errc::LemmaViolation) ++g_lemma_violations;
    t.fail(label + ": " + e.what());
    return std::nullopt;
  }
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(EVENTREE_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[1 << 14];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool g_all_ok = true;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  g_all_ok &= ok;
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  [" << detail << "]"
            << std::endl;
}

std::string summary(const Tally& t, const std::string& extra = {}) {
  std::ostringstream s;
  s << t.runs - t.failures << "/" << t.runs << " ok";
  if (!extra.empty()) s << ", " << extra;
  if (t.failures) s << "; first failure: " << t.first;
  return s.str();
}

void criterion1() {
  Tally t;
  double worst = 0;
  for (auto [n, r] : {std::pair{16, 3}, std::pair{50, 3}, std::pair{200, 3}, std::pair{50, 5}, std::pair{200, 5}}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const GenSpec spec{n, r, seed};
      double ms = 0;
      if (solve_checked(random_regular(spec), tag(spec), t, false, &ms)) {
        worst = std::max(worst, ms);
        if (ms >= 1000) t.fail(tag(spec) + ": took " + std::to_string(ms) + " ms");
      }
    }
  }
  std::ostringstream d;
  d << "slowest solve " << worst << " ms";
  report(1, "odd r, 5 sizes x 100 seeds, verified, each < 1 s", t.ok(), summary(t, d.str()));
}

void criterion2() {
  Tally t;
  for (Vertex n : {50, 200}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const GenSpec spec{n, 4, seed};
      solve_checked(random_regular(spec), tag(spec), t, false);
    }
  }
  report(2, "r=4, 2 sizes x 100 seeds, verified", t.ok(), summary(t));
}

void criterion3() {
  const Graph g = figure1_graph();
  std::vector<std::string> bad;
  if (degree_profile(g) != 3) bad.push_back("not 3-regular");
  if (!is_connected(g)) bad.push_back("disconnected");
  if (!has_odd_simple_cycle(g)) bad.push_back("bipartite");
  if (bridges(g).size() != 3 || bridges_by_deletion(g).size() != 3) bad.push_back("bridge count");
  if (brute_force_two_factor_exists(g)) bad.push_back("has a 2-factor");
  const CliRun run = cli("solve --json fixture:figure1");
  std::size_t edges = 0;
  if (run.code != 0) {
    bad.push_back("solve exit " + std::to_string(run.code));
  } else {
    const auto j = nlohmann::json::parse(run.out);
    std::vector<Edge> tree;
    for (const auto& e : j["tree"]["edges"]) tree.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    edges = tree.size();
    if (edges != 15 || j["certificate"]["overall"] != "pass") bad.push_back("report");
    if (!verify_spanning_even_tree(g, tree).overall() || !leaves_pairwise_even(16, tree)) bad.push_back("tree");
  }
  std::string detail = "n=16 m=24 bridges=3 twoFactor=false, tree edges=" + std::to_string(edges);
  for (const auto& b : bad) detail += "; " + b;
  report(3, "figure1 fixture: structure, no 2-factor, verified 15-edge tree", bad.empty(), detail);
}

void criterion4() {
  Tally t;
  std::vector<std::pair<std::string, Graph>> inputs;
  for (const char* name : {"k4", "c5", "prism", "petersen"}) inputs.emplace_back(name, fixture(name));
  for (int i = 0; i < 50; ++i) {
    const GenSpec spec{static_cast<Vertex>(8 + 2 * (i % 3)), 3, static_cast<std::uint64_t>(1000 + i)};
    inputs.emplace_back(tag(spec), random_regular(spec));
  }
  for (const auto& [label, g] : inputs) {
    const auto rep = solve_checked(g, label, t, false);
    const auto brute = brute_force_even_spanning_tree(g);
    if (!brute) {
      t.fail(label + ": oracle found no even spanning tree");
      continue;
    }
    // Same predicate on both trees.
    if (!verify_even(*brute).overall() || !leaves_pairwise_even(g.order(), *brute)) t.fail(label + ": oracle tree");
    if (rep && verify_even(rep->tree).overall() != verify_even(*brute).overall()) t.fail(label + ": disagreement");
  }
  report(4, "oracle agreement on k4, c5, prism, petersen + 50 cubic n in {8,10,12}", t.ok(), summary(t));
}

// Factor checks straight from the edge multiset.
bool factor_ok(const Graph& g, const Factor& f, bool two_factor, std::string& why) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (const FactorComponent& c : f.components) {
    for (Vertex v : c.ring) ++hits[v];
    const auto edges = c.edges();
    std::vector<int> local(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : edges) {
      if (!g.has_edge(e.u, e.v)) return why = "edge not in graph", false;
      ++local[e.u];
      ++local[e.v];
    }
    const int want = c.is_cycle() ? 2 : 1;
    for (Vertex v : c.ring) {
      if (local[v] != want) return why = "irregular component", false;
      deg[v] += local[v];
    }
    if (component_count(g.order(), edges) - (g.order() - static_cast<Vertex>(c.ring.size())) != 1) {
      return why = "component not connected", false;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (hits[v] != 1) return why = "vertex " + std::to_string(v) + " covered " + std::to_string(hits[v]) + "x", false;
    if (deg[v] < 1 || deg[v] > 2 || (two_factor && deg[v] != 2)) return why = "degree", false;
  }
  return true;
}

void criterion5() {
  Tally good;
  Tally pet;
  for (int i = 0; i < 1000; ++i) {
    const int r = 2 + i % 4;
    const Vertex n = static_cast<Vertex>((r % 2 == 1 ? 10 : 9) + 2 * (i / 4 % 20));
    const GenSpec spec{n, r, static_cast<std::uint64_t>(i), false, false};
    const Graph g = random_regular(spec);
    ++good.runs;
    std::string why;
    try {
      if (!factor_ok(g, good_12_factor(g), false, why)) good.fail(tag(spec) + ": " + why);
    } catch (const Error& e) {
      good.fail(tag(spec) + ": " + e.what());
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const int k = 1 + i % 3;
    const Vertex n = static_cast<Vertex>(2 * k + 3 + (i / 3) % 25);
    GenSpec spec{n, 2 * k, static_cast<std::uint64_t>(i), false, false};
    // The configuration model rarely pairs 6-regular inputs simply.
    spec.rejection_budget = 1'000'000;
    const Graph g = random_regular(spec);
    ++pet.runs;
    std::string why;
    try {
      if (!factor_ok(g, petersen_two_factor(g), true, why)) pet.fail(tag(spec) + ": " + why);
    } catch (const Error& e) {
      pet.fail(tag(spec) + ": " + e.what());
    }
  }
  report(5, "factor invariants: 1000 good_12_factor + 1000 petersen_two_factor (r=2,4,6)", good.ok() && pet.ok(),
         "good_12_factor " + summary(good) + "; petersen_two_factor " + summary(pet));
}

void criterion6() {
  Tally t;
  for (auto [n, r] : {std::pair{16, 3}, std::pair{50, 3}, std::pair{200, 3}, std::pair{50, 5}, std::pair{200, 5},
                      std::pair{50, 4}, std::pair{200, 4}}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const GenSpec spec{n, r, seed};
      solve_checked(random_regular(spec), tag(spec) + " verify-all", t, true);
    }
  }
  for (const char* name : {"k4", "c5", "k5", "prism", "petersen", "wagner", "figure1"}) {
    solve_checked(fixture(name), name, t, true);
  }
  const bool ok = t.ok() && g_progress.ok();
  report(6, "iterations <= initial residual components, |V(tree)| strictly increasing (verify-all)", ok,
         summary(g_progress, "solves " + summary(t)));
}

void criterion7() {
  report(7, "no LemmaViolation on gated inputs across the suite", g_lemma_violations == 0 && g_gated_solves > 0,
         std::to_string(g_lemma_violations) + " violations in " + std::to_string(g_gated_solves) + " solves");
}

void criterion8() {
  Tally t;
  for (const std::string& args : {std::string("solve --json fixture:figure1"), std::string("solve --json fixture:petersen"),
                                  std::string("solve --json --n 200 --r 3 --seed 5"),
                                  std::string("solve --json --n 200 --r 5 --seed 9"),
                                  std::string("solve --json --n 200 --r 4 --seed 2"),
                                  std::string("solve --json --verify-all --n 500 --r 3 --seed 77")}) {
    ++t.runs;
    const CliRun a = cli(args);
    const CliRun b = cli(args);
    if (a.code != 0 || a.out.empty() || a.out != b.out) t.fail(args);
  }
  report(8, "byte-identical JSON reports on repeated CLI runs", t.ok(), summary(t));
}

void criterion9() {
  const auto t0 = Clock::now();
  const CliRun run = cli("solve --json --timings --n 10000 --r 3 --seed 1");
  const double ms = ms_since(t0);
  bool ok = run.code == 0;
  std::string detail = "wall " + std::to_string(static_cast<long>(ms)) + " ms end to end";
  if (ok) {
    const auto j = nlohmann::json::parse(run.out);
    ok = j["certificate"]["overall"] == "pass" && j["tree"]["edgeCount"] == 9999;
    const auto& tm = j["timings"];
    std::ostringstream s;
    s << " (factor " << tm["factorMs"] << ", good tree " << tm["goodTreeMs"] << ", spanning " << tm["spanningMs"]
      << ", verify " << tm["verifyMs"] << " ms)";
    detail += s.str();
  }
  report(9, "n=10000 r=3 solve under 5 s", ok && ms < 5000, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (g_all_ok ? "acceptance: all criteria pass" : "acceptance: FAILURES") << std::endl;
  return g_all_ok ? 0 : 1;
}
