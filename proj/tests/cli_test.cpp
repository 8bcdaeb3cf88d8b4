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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "eventree/generator.hpp"
#include "eventree/io.hpp"
#include "eventree/verifier.hpp"
#include "support.hpp"

#ifndef EVENTREE_CLI
#error "EVENTREE_CLI must name the CLI binary"
#endif

using namespace eventree;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr is dropped.
Run run(const std::string& args) {
  const std::string cmd = std::string(EVENTREE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("eventree_cli_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("solve: K4 and figure1") {
  const Run k4 = run("solve fixture:k4");
  CHECK(k4.code == 0);
  CHECK(first_line(k4.out) == "4 3");
  const Graph g = fixture("k4");
  CHECK(verify_spanning_even_tree(g, parse_edge_records(k4.out).edges).overall());

  const Run fig = run("solve --fixture figure1 --json");
  CHECK(fig.code == 0);
  const auto j = nlohmann::json::parse(fig.out);
  CHECK(j["tree"]["edgeCount"] == 15);
  CHECK(j["input"]["n"] == 16);
  CHECK(j["certificate"]["overall"] == "pass");
}

TEST_CASE("solve: precondition failures have distinct exit codes") {
  TempDir dir;
  CHECK(run("solve " + dir.write("c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")).code == 5);
  CHECK(run("solve " + dir.write("p3.txt", "3 2\n0 1\n1 2\n")).code == 4);
  CHECK(run("solve " + dir.write("two.txt", write_edge_list(build_graph(6, std::vector<Edge>{
                                                                {0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})))).code ==
        6);
  CHECK(run("solve " + dir.write("bad.txt", "3 2\n0 1\n")).code == 3);
  CHECK(run("solve " + dir.write("loop.txt", "3 1\n1 1\n")).code == 3);
  CHECK(run("solve " + (dir.path() / "missing.txt").string()).code == 12);
  CHECK(run("solve fixture:nope").code == 10);
  CHECK(run("").code == 2);
  CHECK(run("solve --bogus").code == 2);
  CHECK(run("solve fixture:k4 --fixture k4").code == 2);
  const Run err = run("solve --json fixture:c6");
  CHECK(err.code == 5);
  CHECK(nlohmann::json::parse(err.out)["error"]["code"] == "Bipartite");
}

TEST_CASE("solve: generated input, DOT and output file") {
  TempDir dir;
  const std::string dot = (dir.path() / "t.dot").string();
  const std::string out = (dir.path() / "t.txt").string();
  CHECK(run("solve --n 40 --r 5 --seed 3 --dot " + dot + " -o " + out).code == 0);
  std::ifstream d(dot);
  std::stringstream ds;
  ds << d.rdbuf();
  CHECK(ds.str().rfind("graph even_tree {", 0) == 0);
  const Graph g = random_regular({40, 5, 3});
  CHECK(verify_spanning_even_tree(g, read_edge_records_file(out).edges).overall());
}

TEST_CASE("verify: examples") {
  TempDir dir;
  const std::string c5 = dir.write("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  CHECK(run("verify " + c5 + " --tree " + dir.write("p.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n")).code == 0);
  const Run odd = run("verify fixture:k4 --tree " + dir.write("p3.txt", "4 3\n0 1\n1 2\n2 3\n"));
  CHECK(odd.code == 1);
  CHECK(odd.out.find("even.leaf_parity") != std::string::npos);
  const Run part = run("verify fixture:k4 --json --tree " + dir.write("p2.txt", "4 2\n0 1\n0 2\n"));
  CHECK(part.code == 1);
  CHECK(nlohmann::json::parse(part.out)["overall"] == "fail");
  CHECK(run("verify fixture:k4 --tree " + dir.write("junk.txt", "4 2\n0 1\n")).code == 3);
}

TEST_CASE("gen: examples and round trip") {
  const Run a = run("gen --n 16 --r 3 --seed 7");
  CHECK(a.code == 0);
  CHECK(first_line(a.out) == "16 24");
  CHECK(run("gen --n 16 --r 3 --seed 7").out == a.out);
  CHECK(parse_graph(a.out).size() == 24);
  CHECK(first_line(run("gen --fixture petersen").out) == "10 15");
  CHECK(run("gen --n 5 --r 3").code == 7);
  const Run dimacs = run("gen --n 16 --r 3 --seed 7 --format dimacs");
  CHECK(first_line(dimacs.out) == "p edge 16 24");

  TempDir dir;
  const std::string path = dir.write("g.txt", a.out);
  const Run s = run("solve " + path);
  CHECK(s.code == 0);
  CHECK(verify_spanning_even_tree(parse_graph(a.out), parse_edge_records(s.out).edges).overall());
  const std::string dpath = dir.write("g.dimacs", dimacs.out);
  CHECK(run("solve --format dimacs " + dpath).out == s.out);
}

TEST_CASE("oracle: examples") {
  const auto fig = nlohmann::json::parse(run("oracle fixture:figure1").out);
  CHECK(fig["evenSpanningTree"] == true);
  CHECK(fig["twoFactor"] == false);
  const auto c4 = nlohmann::json::parse(run("oracle fixture:c4").out);
  CHECK(c4["evenSpanningTree"] == false);
  CHECK(c4["twoFactor"] == true);
  const auto k4 = nlohmann::json::parse(run("oracle fixture:k4").out);
  CHECK(k4["evenSpanningTree"] == true);
  CHECK(k4["twoFactor"] == true);
  TempDir dir;
  CHECK(run("oracle " + dir.write("big.txt", write_edge_list(random_regular({80, 3, 1})))).code == 9);
}

TEST_CASE("batch: output ordered by file name") {
  TempDir dir;
  fs::create_directories(dir.path() / "in");
  std::ofstream(dir.path() / "in" / "c.txt") << write_edge_list(random_regular({20, 3, 2}));
  std::ofstream(dir.path() / "in" / "a.txt") << write_edge_list(fixture("petersen"));
  std::ofstream(dir.path() / "in" / "b.txt") << write_edge_list(fixture("c6"));
  const std::string in = (dir.path() / "in").string();
  const Run r = run("solve --json --jobs 3 --batch " + in);
  CHECK(r.code == 5);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["batch"].size() == 3);
  CHECK(j["batch"][0]["file"] == "a.txt");
  CHECK(j["batch"][1]["file"] == "b.txt");
  CHECK(j["batch"][2]["file"] == "c.txt");
  CHECK(j["batch"][0]["exitCode"] == 0);
  CHECK(j["batch"][1]["exitCode"] == 5);
  // Worker count does not change the bytes.
  CHECK(run("solve --json --jobs 1 --batch " + in).out == r.out);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string args = "solve --json --verify-all --n 200 --r 3 --seed 11";
  const Run a = run(args);
  CHECK(a.code == 0);
  CHECK(run(args).out == a.out);
}
