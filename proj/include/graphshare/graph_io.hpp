// Copyright 2026 The graphshare Authors.
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

// Line-oriented graph text format:
//
//   graph <V> <E>
//   v <id> <num>/<den>      (or v <id> <int>), V lines
//   e <u> <v>               E lines
//
// Lines starting with '#' and blank lines are ignored. Ids are 0..V-1.

#ifndef GRAPHSHARE_GRAPH_IO_HPP_
#define GRAPHSHARE_GRAPH_IO_HPP_

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphshare/graph.hpp"

namespace graphshare {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline WeightedGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int declared_vertices = -1, declared_edges = -1;
  int seen_edges = 0;
  std::vector<bool> has_weight;
  WeightedGraph g;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    std::string extra;
    if (kind == "graph") {
      if (declared_vertices >= 0) throw ParseError(line_no, "duplicate graph header");
      if (!(fields >> declared_vertices >> declared_edges) || (fields >> extra))
        throw ParseError(line_no, "expected 'graph <V> <E>'");
      if (declared_vertices < 1 || declared_vertices > kMaxVertices || declared_edges < 0)
        throw ParseError(line_no, "vertex count must be in [1, " + std::to_string(kMaxVertices) +
                                      "] and edge count non-negative");
      g = WeightedGraph(declared_vertices);
      has_weight.assign(declared_vertices, false);
      continue;
    }
    if (declared_vertices < 0) throw ParseError(line_no, "missing 'graph' header");
    if (kind == "v") {
      int id = -1;
      std::string weight_text;
      if (!(fields >> id >> weight_text) || (fields >> extra))
        throw ParseError(line_no, "expected 'v <id> <weight>'");
      if (seen_edges > 0) throw ParseError(line_no, "vertex line after edge lines");
      if (id < 0 || id >= declared_vertices) throw ParseError(line_no, "vertex id out of range");
      if (has_weight[id]) throw ParseError(line_no, "duplicate vertex " + std::to_string(id));
      auto w = parse_weight(weight_text);
      if (!w || *w < 0) throw ParseError(line_no, "bad weight '" + weight_text + "'");
      g.set_weight(id, *w);
      has_weight[id] = true;
    } else if (kind == "e") {
      int u = -1, v = -1;
      if (!(fields >> u >> v) || (fields >> extra)) throw ParseError(line_no, "expected 'e <u> <v>'");
      if (u < 0 || u >= declared_vertices || v < 0 || v >= declared_vertices)
        throw ParseError(line_no, "edge endpoint out of range");
      if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
      if (!g.add_edge(u, v)) throw ParseError(line_no, "duplicate edge");
      ++seen_edges;
    } else {
      throw ParseError(line_no, "unknown record '" + kind + "'");
    }
  }
  if (declared_vertices < 0) throw ParseError(line_no, "missing 'graph' header");
  for (int v = 0; v < declared_vertices; ++v)
    if (!has_weight[v]) throw ParseError(line_no, "vertex " + std::to_string(v) + " has no 'v' line");
  if (seen_edges != declared_edges)
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                  std::to_string(seen_edges));
  return g;
}

inline WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_graph(in);
}

inline WeightedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const WeightedGraph& g) {
  const auto edges = g.edges();
  out << "graph " << g.size() << ' ' << edges.size() << '\n';
  for (Vertex v = 0; v < g.size(); ++v) {
    const Weight& w = g.weight(v);
    out << "v " << v << ' ';
    if (w.denominator() == 1)
      out << w.numerator();
    else
      out << to_string(w);
    out << '\n';
  }
  for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
}

inline std::string format_graph(const WeightedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace graphshare

#endif  // GRAPHSHARE_GRAPH_IO_HPP_
