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

#ifndef EVENTREE_REPORT_HPP
#define EVENTREE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eventree/error.hpp"
#include "eventree/factor.hpp"
#include "eventree/graph.hpp"
#include "eventree/spanner.hpp"
#include "eventree/tree_builder.hpp"
#include "eventree/verifier.hpp"

namespace eventree {

struct InputSummary {
  std::string source;
  Vertex n = 0;
  std::size_t m = 0;
  std::optional<int> r;  // absent when irregular
  bool connected = false;
  bool nonbipartite = false;
  std::vector<Edge> bridges;
};

InputSummary summarize(const Graph& g, std::string source);

struct PhaseTimings {
  double factor_ms = 0;
  double good_tree_ms = 0;
  double spanning_ms = 0;
  double verify_ms = 0;
};

struct SolveOptions {
  bool verify_all = false;
};

struct RunReport {
  InputSummary input;
  PhaseTimings timings;
  FactorCensus census;
  GoodTreeTrace good_tree;
  std::size_t good_tree_vertices = 0;
  std::size_t initial_residual_components = 0;
  std::vector<AugmentationStep> steps;
  std::vector<Edge> tree;
  std::vector<std::int8_t> side;  // per vertex; kLeafSide / kInnerSide
  Certificate certificate;
};

// Precondition gates, factor, good even tree, augmentation, verification.
// Throws Error{NotRegular | Disconnected | Bipartite | LemmaViolation |
// SpliceInvariantViolation}. A failed certificate is returned, not thrown.
RunReport run_solve(const Graph& g, std::string source, const SolveOptions& options = {});

// Key order is fixed. Timings are left out unless asked for, so identical
// runs serialize to identical bytes.
nlohmann::ordered_json report_json(const RunReport& report, bool with_timings = false);
nlohmann::ordered_json certificate_json(const Certificate& cert);
nlohmann::ordered_json error_json(const Error& e);

// Tree in DOT, vertices tagged with their side; degree-one vertices drawn
// as double circles.
std::string tree_dot(const std::vector<Edge>& tree, const std::vector<std::int8_t>& side);

struct OracleReport {
  bool even_spanning_tree = false;
  bool two_factor = false;
  std::optional<std::vector<Edge>> witness;
};

// Throws Error{BudgetExceeded}.
OracleReport run_oracle(const Graph& g);
nlohmann::ordered_json oracle_json(const OracleReport& report);

// Process exit codes, stable across releases.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitNotRegular = 4,
  kExitBipartite = 5,
  kExitDisconnected = 6,
  kExitInfeasible = 7,
  kExitRejectionBudget = 8,
  kExitBudgetExceeded = 9,
  kExitUnknownFixture = 10,
  kExitInternal = 11,
  kExitIo = 12,
};

int exit_code_for(Errc code) noexcept;

}  // namespace eventree

#endif  // EVENTREE_REPORT_HPP
