#pragma once

#include <sstream>
#include <string>

#include "domgame/graph.hpp"

namespace domgame {

// Edge-list text format: header "n m", then m lines "u v" with
// 0 <= u < v < n. Lines starting with '#' and blank lines are ignored.
// ASCII, LF-terminated; emit order is sorted pairs, so parse/emit round-trip
// is byte-exact on canonical files.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_data_line(header)) throw ParseError(line_no + 1, "missing header");
  long long n, m;
  {
    std::istringstream hs(header);
    if (!(hs >> n >> m) || n < 0 || m < 0)
      throw ParseError(line_no, "header must be \"n m\"");
    std::string junk;
    if (hs >> junk) throw ParseError(line_no, "trailing tokens after header");
  }

  std::vector<Edge> edges;
  edges.reserve(size_t(m));
  std::vector<VertexSet> seen(size_t(n), VertexSet{int(n)});
  for (long long i = 0; i < m; ++i) {
    std::string e;
    if (!next_data_line(e))
      throw ParseError(line_no + 1, "expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
    std::istringstream es(e);
    long long u, v;
    if (!(es >> u >> v)) throw ParseError(line_no, "edge line must be \"u v\"");
    std::string junk;
    if (es >> junk) throw ParseError(line_no, "trailing tokens on edge line");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line_no, "vertex index out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (u > v) throw ParseError(line_no, "edge must be written u v with u < v");
    if (seen[size_t(u)].test(int(v))) throw ParseError(line_no, "duplicate edge");
    seen[size_t(u)].set(int(v));
    edges.emplace_back(int(u), int(v));
  }
  std::string extra;
  if (next_data_line(extra)) throw ParseError(line_no, "unexpected extra line");
  return Graph::from_edges(int(n), edges);
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace domgame
