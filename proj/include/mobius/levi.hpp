#pragma once

#include <string>
#include <vector>

#include "mobius/bits.hpp"
#include "mobius/config.hpp"

namespace mobius::levi {

// Bipartite incidence graph on the 4n elements, vertex ids = eids: points
// 0..2n-1, blocks 2n..4n-1. Edges only between the two color classes.
struct LeviGraph {
  int n = 0;
  std::vector<Bits> adj;  // 4n rows over 4n bits, symmetric

  int vertex_count() const { return 4 * n; }
  bool is_point_vertex(int v) const { return v < 2 * n; }
  bool adjacent(int u, int v) const { return adj[u].test(v); }
  int rank(int v) const { return adj[v].count(); }
  int incidence_pairs() const;

  // Test hook for mutation fixtures.
  void toggle_edge(int u, int v) {
    adj[u].flip(v);
    adj[v].flip(u);
  }
};

LeviGraph levi_graph(const config::MobiusPair& M);

// Deterministic DOT text: vertices a1..an, b1..bn, A1..An, B1..Bn with points
// drawn as circles and blocks as boxes; one line per incidence pair, endpoint
// order and line order lexicographic.
std::string export_dot(const LeviGraph& G);

struct RemarkReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// Within each simplex every point-vertex must miss exactly one block-vertex
// and vice versa; across simplices every point-vertex meets exactly one
// block-vertex and vice versa.
RemarkReport check_remark_1_1(const LeviGraph& G);

}  // namespace mobius::levi
