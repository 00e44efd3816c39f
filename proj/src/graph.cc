// Copyright 2026 The Authors.
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

#include "peelfw/graph.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace peelfw {

MultiGraph::MultiGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw InputError("negative vertex count");
  incident_.resize(num_vertices_);
  for (int e = 0; e < num_edges(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.u >= num_vertices_ || ed.v < 0 ||
        ed.v >= num_vertices_) {
      throw InputError("edge " + std::to_string(e) +
                       " has an endpoint outside 0.." +
                       std::to_string(num_vertices_ - 1));
    }
    if (ed.u == ed.v) {
      throw InputError("edge " + std::to_string(e) + " is a self-loop");
    }
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
}

void MultiGraph::CheckVertex(int v) const {
  if (v < 0 || v >= num_vertices_) {
    throw InputError("invalid vertex id " + std::to_string(v));
  }
}

const MultiGraph::Edge& MultiGraph::edge(int e) const {
  if (e < 0 || e >= num_edges()) {
    throw InputError("invalid edge index " + std::to_string(e));
  }
  return edges_[e];
}

int MultiGraph::Degree(int v) const {
  CheckVertex(v);
  return static_cast<int>(incident_[v].size());
}

std::span<const int> MultiGraph::IncidentEdges(int v) const {
  CheckVertex(v);
  return incident_[v];
}

int MultiGraph::Opposite(int e, int v) const {
  const Edge& ed = edge(e);
  return ed.u == v ? ed.v : ed.u;
}

std::int64_t MultiGraph::SumSquaredDegrees() const {
  std::int64_t total = 0;
  for (const auto& inc : incident_) {
    const auto d = static_cast<std::int64_t>(inc.size());
    total += d * d;
  }
  return total;
}

namespace {

bool ParseVertexId(std::string_view token, int& out) {
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && out >= 0;
}

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

MultiGraph ParseEdgeList(std::string_view text) {
  std::vector<MultiGraph::Edge> edges;
  int max_id = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = SplitWhitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    int u = 0;
    int v = 0;
    if (tokens.size() != 2 || !ParseVertexId(tokens[0], u) ||
        !ParseVertexId(tokens[1], v)) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected two nonnegative vertex ids");
    }
    if (u == v) {
      throw InputError("line " + std::to_string(line_no) + ": self-loop at " +
                       std::to_string(u));
    }
    edges.push_back({u, v});
    max_id = std::max({max_id, u, v});
  }
  if (edges.empty()) throw InputError("empty graph: no edges in input");
  return MultiGraph(max_id + 1, std::move(edges));
}

MultiGraph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseEdgeList(buffer.str());
}

int CountComponents(const MultiGraph& g, std::span<const int> edge_subset) {
  DisjointSets sets(g.num_vertices());
  for (int e : edge_subset) sets.Union(g.edge(e).u, g.edge(e).v);
  return sets.count();
}

int CountComponents(const MultiGraph& g, const Subset& edge_subset) {
  if (static_cast<int>(edge_subset.size()) != g.num_edges()) {
    throw InputError("edge subset size does not match edge count");
  }
  DisjointSets sets(g.num_vertices());
  for (auto e = edge_subset.find_first(); e != Subset::npos;
       e = edge_subset.find_next(e)) {
    const auto& ed = g.edges()[e];
    sets.Union(ed.u, ed.v);
  }
  return sets.count();
}

bool IsConnected(const MultiGraph& g) {
  return CountComponents(g, FullSubset(g.num_edges())) == 1;
}

std::vector<int> ComponentLabels(const MultiGraph& g,
                                 const Subset& edge_subset) {
  DisjointSets sets(g.num_vertices());
  for (auto e = edge_subset.find_first(); e != Subset::npos;
       e = edge_subset.find_next(e)) {
    sets.Union(g.edges()[e].u, g.edges()[e].v);
  }
  std::vector<int> root_label(g.num_vertices(), -1);
  std::vector<int> labels(g.num_vertices());
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = sets.Find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    labels[v] = root_label[r];
  }
  return labels;
}

MultiGraph CompleteGraph(int n) {
  std::vector<MultiGraph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return MultiGraph(n, std::move(edges));
}

MultiGraph StarGraph(int leaves) {
  std::vector<MultiGraph::Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return MultiGraph(leaves + 1, std::move(edges));
}

MultiGraph PathGraph(int n) {
  std::vector<MultiGraph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return MultiGraph(n, std::move(edges));
}

}  // namespace peelfw
