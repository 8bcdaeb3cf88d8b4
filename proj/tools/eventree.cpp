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

// eventree: spanning even trees of regular nonbipartite connected graphs.
//
//   eventree solve fixture:figure1 --json
//   eventree solve graph.txt --dot tree.dot
//   eventree solve --batch graphs/ --jobs 4 --json
//   eventree verify graph.txt --tree tree.txt
//   eventree gen --n 16 --r 3 --seed 7 > g.txt
//   eventree oracle fixture:c4

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "eventree/error.hpp"
#include "eventree/generator.hpp"
#include "eventree/io.hpp"
#include "eventree/report.hpp"
#include "eventree/verifier.hpp"

namespace fs = std::filesystem;
using namespace eventree;

namespace {

constexpr std::string_view kFixturePrefix = "fixture:";

struct InputFlags {
  std::string positional;
  std::string input;
  std::string fixture_name;
  std::string format = "auto";
  std::optional<Vertex> n;
  std::optional<int> r;
  std::uint64_t seed = 0;
};

void add_input_flags(CLI::App* cmd, InputFlags& f, bool with_random) {
  cmd->add_option("graph", f.positional, "Graph file, or fixture:NAME");
  cmd->add_option("--input", f.input, "Graph file");
  cmd->add_option("--fixture", f.fixture_name, "Built-in fixture name");
  cmd->add_option("--format", f.format, "Input format")->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
  if (with_random) {
    cmd->add_option("--n", f.n, "Generate a random regular input with this many vertices");
    cmd->add_option("--r", f.r, "Degree of the generated input");
    cmd->add_option("--seed", f.seed, "Generator seed");
  }
}

std::size_t rejection_budget() {
  const char* env = std::getenv("EVENTREE_REJECTION_BUDGET");
  if (env == nullptr || *env == '\0') return GenSpec{}.rejection_budget;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used != std::string_view(env).size()) throw std::invalid_argument("trailing characters");
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw CLI::ValidationError("EVENTREE_REJECTION_BUDGET", "expected a non-negative integer");
  }
}

struct Loaded {
  Graph graph;
  std::string source;
};

Loaded load_graph(const InputFlags& f) {
  std::string fixture_name = f.fixture_name;
  std::string path = f.input;
  if (!f.positional.empty()) {
    if (f.positional.starts_with(kFixturePrefix)) {
      fixture_name = f.positional.substr(kFixturePrefix.size());
    } else {
      path = f.positional;
    }
  }
  const int given = int(!f.positional.empty()) + int(!f.fixture_name.empty()) + int(!f.input.empty()) +
                    int(f.n.has_value() || f.r.has_value());
  if (given != 1) throw CLI::ValidationError("input", "give exactly one of a graph file, a fixture, or --n/--r");
  if (!fixture_name.empty()) return {fixture(fixture_name), std::string(kFixturePrefix) + fixture_name};
  if (!path.empty()) return {read_graph_file(path, *parse_format(f.format)), path};
  if (!f.n || !f.r) throw CLI::ValidationError("input", "--n and --r go together");
  GenSpec spec{*f.n, *f.r, f.seed};
  spec.rejection_budget = rejection_budget();
  return {random_regular(spec), "random:n=" + std::to_string(*f.n) + ",r=" + std::to_string(*f.r) +
                                    ",seed=" + std::to_string(f.seed)};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// ---- solve ----

struct SolveFlags {
  InputFlags in;
  bool json = false;
  bool timings = false;
  bool verify_all = false;
  std::string dot;
  std::string output;
  std::string batch;
  unsigned jobs = 0;
};

int solve_one(const SolveFlags& f) {
  Loaded loaded = load_graph(f.in);
  const RunReport report = run_solve(loaded.graph, loaded.source, SolveOptions{f.verify_all});
  const bool pass = report.certificate.overall();
  if (f.json) {
    write_text(f.output, dump(report_json(report, f.timings)));
  } else {
    write_text(f.output, write_edge_list(loaded.graph.order(), report.tree));
    std::cerr << loaded.source << ": n=" << report.input.n << " m=" << report.input.m
              << " tree_edges=" << report.tree.size() << " steps=" << report.steps.size()
              << " certificate=" << (pass ? "pass" : "fail") << "\n";
    if (!pass) std::cerr << report.certificate.first_failure() << "\n";
  }
  if (!f.dot.empty() && pass) write_text(f.dot, tree_dot(report.tree, report.side));
  return pass ? kExitOk : kExitVerifyFailed;
}

struct BatchItem {
  std::string name;
  int code = kExitOk;
  nlohmann::ordered_json body;
  std::string line;
};

BatchItem solve_file(const fs::path& path, const SolveFlags& f) {
  BatchItem item;
  item.name = path.filename().string();
  try {
    const Graph g = read_graph_file(path, *parse_format(f.in.format));
    const RunReport report = run_solve(g, item.name, SolveOptions{f.verify_all});
    const bool pass = report.certificate.overall();
    item.code = pass ? kExitOk : kExitVerifyFailed;
    item.body = report_json(report, f.timings);
    item.line = item.name + ": n=" + std::to_string(report.input.n) + " tree_edges=" +
                std::to_string(report.tree.size()) + " certificate=" + (pass ? "pass" : "fail");
  } catch (const Error& e) {
    item.code = exit_code_for(e.code());
    item.body = error_json(e);
    item.line = item.name + ": " + e.what();
  }
  return item;
}

int solve_batch(const SolveFlags& f) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(f.batch, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) throw Error(Errc::IoError, "cannot list " + f.batch + ": " + ec.message());
  std::sort(files.begin(), files.end());

  // Workers claim files by index; results land in input order.
  std::vector<BatchItem> items(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) items[i] = solve_file(files[i], f);
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned jobs = std::min<std::size_t>(f.jobs == 0 ? hw : f.jobs, std::max<std::size_t>(1, files.size()));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  pool.clear();

  int code = kExitOk;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  std::string lines;
  for (BatchItem& item : items) {
    if (code == kExitOk) code = item.code;
    nlohmann::ordered_json j;
    j["file"] = item.name;
    j["exitCode"] = item.code;
    j["result"] = std::move(item.body);
    all.push_back(std::move(j));
    lines += item.line + "\n";
  }
  write_text(f.output, f.json ? dump({{"batch", std::move(all)}}) : lines);
  return code;
}

// ---- verify ----

struct VerifyFlags {
  InputFlags in;
  std::string tree;
  bool json = false;
};

int run_verify(const VerifyFlags& f) {
  const Loaded loaded = load_graph(f.in);
  const EdgeRecords tree = read_edge_records_file(f.tree);
  const Certificate cert = verify_spanning_even_tree(loaded.graph, tree.edges);
  if (f.json) {
    write_text("", dump(certificate_json(cert)));
  } else {
    write_text("", cert.overall() ? "pass\n" : "fail: " + cert.first_failure() + "\n");
  }
  return cert.overall() ? kExitOk : kExitVerifyFailed;
}

// ---- gen ----

struct GenFlags {
  std::optional<Vertex> n;
  std::optional<int> r;
  std::uint64_t seed = 0;
  std::string fixture_name;
  std::string format = "edgelist";
  std::string output;
  bool allow_disconnected = false;
  bool allow_bipartite = false;
};

int run_gen(const GenFlags& f) {
  Graph g;
  if (!f.fixture_name.empty()) {
    if (f.n || f.r) throw CLI::ValidationError("gen", "--fixture excludes --n/--r");
    g = fixture(f.fixture_name);
  } else {
    if (!f.n || !f.r) throw CLI::ValidationError("gen", "need --n and --r, or --fixture");
    GenSpec spec{*f.n, *f.r, f.seed};
    spec.connected = !f.allow_disconnected;
    spec.nonbipartite = !f.allow_bipartite;
    spec.rejection_budget = rejection_budget();
    g = random_regular(spec);
  }
  write_text(f.output, f.format == "dimacs" ? write_dimacs(g) : write_edge_list(g));
  return kExitOk;
}

// ---- oracle ----

int run_oracle_cmd(const InputFlags& in) {
  const Loaded loaded = load_graph(in);
  write_text("", dump(oracle_json(run_oracle(loaded.graph))));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning even trees of regular nonbipartite connected graphs"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Build and verify a spanning even tree");
  add_input_flags(solve_cmd, solve.in, true);
  solve_cmd->add_flag("--json", solve.json, "Emit the JSON run report");
  solve_cmd->add_flag("--timings", solve.timings, "Include phase timings in the JSON report");
  solve_cmd->add_flag("--verify-all", solve.verify_all, "Re-verify after every augmentation step");
  solve_cmd->add_option("--dot", solve.dot, "Write the tree as DOT to this path");
  solve_cmd->add_option("-o,--output", solve.output, "Write the main output here instead of stdout");
  solve_cmd->add_option("--batch", solve.batch, "Solve every file in this directory");
  solve_cmd->add_option("--jobs", solve.jobs, "Batch workers (default: hardware threads)");

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate spanning even tree");
  add_input_flags(verify_cmd, verify.in, false);
  verify_cmd->add_option("--tree", verify.tree, "Tree edge list (\"n m\" header, 0-based ids)")->required();
  verify_cmd->add_flag("--json", verify.json, "Emit the certificate as JSON");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a random regular graph or a fixture");
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--r", gen.r, "Degree");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--fixture", gen.fixture_name, "Built-in fixture name");
  gen_cmd->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"edgelist", "dimacs"}));
  gen_cmd->add_option("-o,--output", gen.output, "Output path (default stdout)");
  gen_cmd->add_flag("--allow-disconnected", gen.allow_disconnected, "Do not require connectivity");
  gen_cmd->add_flag("--allow-bipartite", gen.allow_bipartite, "Do not require an odd cycle");

  InputFlags oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force existence checks for small graphs");
  add_input_flags(oracle_cmd, oracle, false);

  try {
    app.parse(argc, argv);
    if (*solve_cmd) return solve.batch.empty() ? solve_one(solve) : solve_batch(solve);
    if (*verify_cmd) return run_verify(verify);
    if (*gen_cmd) return run_gen(gen);
    if (*oracle_cmd) return run_oracle_cmd(oracle);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    // JSON consumers get a parseable error object on stdout.
    if ((*solve_cmd && solve.json) || (*verify_cmd && verify.json) || *oracle_cmd) std::cout << dump(error_json(e));
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
