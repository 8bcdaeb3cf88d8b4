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

#include "eventree/io.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "eventree/error.hpp"

namespace eventree {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

bool is_comment(const std::string& t, GraphFormat format) {
  const auto first = t.find_first_not_of(" \t\r");
  if (first == std::string::npos || t[first] == '#') return true;
  return format == GraphFormat::Dimacs && t[first] == 'c' &&
         (first + 1 == t.size() || t[first + 1] == ' ' || t[first + 1] == '\t' || t[first + 1] == '\r');
}

std::vector<Line> content_lines(std::string_view text, GraphFormat format) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string t;
  std::size_t number = 0;
  while (std::getline(in, t)) {
    ++number;
    if (!is_comment(t, format)) out.push_back({number, t});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + why);
}

// Reads exactly the expected integers from a line (after an optional tag).
template <std::size_t N>
std::array<long long, N> read_ints(const Line& line, std::string_view tag) {
  std::istringstream in(line.text);
  if (!tag.empty()) {
    std::string word;
    if (!(in >> word) || word != tag) fail(line.number, "expected '" + std::string(tag) + "'");
  }
  std::array<long long, N> out{};
  for (auto& x : out) {
    if (!(in >> x)) fail(line.number, "expected " + std::to_string(N) + " integers");
  }
  std::string extra;
  if (in >> extra) fail(line.number, "unexpected trailing '" + extra + "'");
  return out;
}

// edges[i] came from lines[i + 1].
Graph finish(long long n, std::vector<Edge> edges, const std::vector<Line>& lines) {
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].u == edges[i].v) fail(lines[i + 1].number, "loop at vertex " + std::to_string(edges[i].u));
    if (!seen.insert(make_edge(edges[i].u, edges[i].v)).second) fail(lines[i + 1].number, "repeated edge");
  }
  try {
    return build_graph(static_cast<Vertex>(n), edges);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

EdgeRecords edge_records(const std::vector<Line>& lines) {
  if (lines.empty()) throw Error(Errc::ParseError, "empty input");
  const auto [n, m] = read_ints<2>(lines[0], "");
  if (n < 0 || m < 0 || n > (1LL << 30)) fail(lines[0].number, "bad header");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw Error(Errc::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = read_ints<2>(lines[i], "");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(lines[i].number, "vertex out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return {static_cast<Vertex>(n), std::move(edges)};
}

Graph parse_edge_list(const std::vector<Line>& lines) {
  EdgeRecords records = edge_records(lines);
  return finish(records.n, std::move(records.edges), lines);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph parse_dimacs(const std::vector<Line>& lines) {
  if (lines.empty()) throw Error(Errc::ParseError, "empty input");
  std::istringstream head(lines[0].text);
  std::string p;
  std::string kind;
  long long n = -1;
  long long m = -1;
  if (!(head >> p >> kind >> n >> m) || p != "p" || n < 0 || m < 0 || n > (1LL << 30)) {
    fail(lines[0].number, "expected 'p edge n m'");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw Error(Errc::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = read_ints<2>(lines[i], "e");
    if (u < 1 || v < 1 || u > n || v > n) fail(lines[i].number, "vertex out of range");
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  }
  return finish(n, std::move(edges), lines);
}

}  // namespace

std::optional<GraphFormat> parse_format(std::string_view name) {
  if (name == "auto") return GraphFormat::Auto;
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  return std::nullopt;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    const auto lines = content_lines(text, GraphFormat::Dimacs);
    const bool dimacs = !lines.empty() && lines[0].text.find_first_not_of(" \t") != std::string::npos &&
                        lines[0].text[lines[0].text.find_first_not_of(" \t")] == 'p';
    format = dimacs ? GraphFormat::Dimacs : GraphFormat::EdgeList;
  }
  const auto lines = content_lines(text, format);
  return format == GraphFormat::Dimacs ? parse_dimacs(lines) : parse_edge_list(lines);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  return parse_graph(slurp(path), format);
}

EdgeRecords parse_edge_records(std::string_view text) {
  return edge_records(content_lines(text, GraphFormat::EdgeList));
}

EdgeRecords read_edge_records_file(const std::filesystem::path& path) {
  return parse_edge_records(slurp(path));
}

std::string write_edge_list(Vertex n, std::span<const Edge> edges) {
  std::ostringstream out;
  out << n << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string write_edge_list(const Graph& g) { return write_edge_list(g.order(), g.edges()); }

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

}  // namespace eventree
