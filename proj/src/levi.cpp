#include "mobius/levi.hpp"

#include <algorithm>

namespace mobius::levi {

using config::ElementId;
using config::ElementKind;
using config::from_eid;

int LeviGraph::incidence_pairs() const {
  int total = 0;
  for (const auto& row : adj) total += row.count();
  return total / 2;
}

LeviGraph levi_graph(const config::MobiusPair& M) {
  const int n = M.n();
  LeviGraph G{n, std::vector<Bits>(4 * n, Bits(4 * n))};
  for (int b = 0; b < 2 * n; ++b)
    M.block_points(b).for_each([&](int p) {
      G.adj[p].set(2 * n + b);
      G.adj[2 * n + b].set(p);
    });
  return G;
}

std::string export_dot(const LeviGraph& G) {
  const int n = G.n;
  std::string out = "graph levi {\n";
  for (int id = 0; id < 4 * n; ++id) {
    const ElementId e = from_eid(id, n);
    out += "  " + config::name(e) +
           (config::is_point(e.kind) ? " [shape=circle];\n" : " [shape=box];\n");
  }
  std::vector<std::string> edges;
  for (int u = 0; u < 4 * n; ++u)
    G.adj[u].for_each([&](int v) {
      if (v <= u) return;
      std::string a = config::name(from_eid(u, n));
      std::string b = config::name(from_eid(v, n));
      if (b < a) std::swap(a, b);
      edges.push_back("  " + a + " -- " + b + ";\n");
    });
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) out += e;
  out += "}\n";
  return out;
}

namespace {

std::string side_name(int side) {
  static constexpr const char* names[] = {"a", "b", "A", "B"};
  return names[side];
}

}  // namespace

RemarkReport check_remark_1_1(const LeviGraph& G) {
  const int n = G.n;
  RemarkReport report;
  auto fail = [&](const std::string& msg) {
    report.pass = false;
    report.violations.push_back(msg);
  };

  // Vertex families by eid range: a=0, b=1, A=2, B=3. Simplex S_A holds
  // families {a, A}, S_B holds {b, B}.
  Bits family[4];
  for (int f = 0; f < 4; ++f) {
    family[f] = Bits(4 * n);
    for (int i = 0; i < n; ++i) family[f].set(f * n + i);
  }

  auto check_count = [&](int v, int fam, int expected, const char* relation) {
    const int got = Bits::and_count(G.adj[v], family[fam]);
    if (got != expected)
      fail(config::name(from_eid(v, n)) + " " + relation + " " + std::to_string(got) + " " +
           side_name(fam) + "-vertices, expected " + std::to_string(expected));
  };

  for (int i = 0; i < n; ++i) {
    // clause (i): inside each simplex, all but one
    check_count(i, 2, n - 1, "adjacent to");          // a_i vs A-blocks
    check_count(n + i, 3, n - 1, "adjacent to");      // b_i vs B-blocks
    check_count(2 * n + i, 0, n - 1, "adjacent to");  // A_i vs a-points
    check_count(3 * n + i, 1, n - 1, "adjacent to");  // B_i vs b-points
    // clause (ii): across simplices, exactly one
    check_count(i, 3, 1, "adjacent to");          // a_i vs B-blocks
    check_count(n + i, 2, 1, "adjacent to");      // b_i vs A-blocks
    check_count(2 * n + i, 1, 1, "adjacent to");  // A_i vs b-points
    check_count(3 * n + i, 0, 1, "adjacent to");  // B_i vs a-points
  }

  // Bipartiteness between points and blocks.
  for (int u = 0; u < 4 * n; ++u)
    G.adj[u].for_each([&](int v) {
      if (G.is_point_vertex(u) == G.is_point_vertex(v))
        fail("edge " + config::name(from_eid(u, n)) + " -- " + config::name(from_eid(v, n)) +
             " joins two vertices of the same color");
    });

  return report;
}

}  // namespace mobius::levi
