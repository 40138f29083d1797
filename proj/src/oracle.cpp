#include "mobius/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace mobius::oracle {

using config::MobiusPair;

IsoMap identity_iso(int n) {
  IsoMap f{std::vector<int>(2 * n), std::vector<int>(2 * n)};
  for (int i = 0; i < 2 * n; ++i) f.point_map[i] = f.block_map[i] = i;
  return f;
}

IsoMap compose(const IsoMap& f, const IsoMap& g) {
  IsoMap h{std::vector<int>(g.point_map.size()), std::vector<int>(g.block_map.size())};
  for (std::size_t i = 0; i < g.point_map.size(); ++i)
    h.point_map[i] = f.point_map[g.point_map[i]];
  for (std::size_t i = 0; i < g.block_map.size(); ++i)
    h.block_map[i] = f.block_map[g.block_map[i]];
  return h;
}

IsoMap inverse(const IsoMap& f) {
  IsoMap h{std::vector<int>(f.point_map.size()), std::vector<int>(f.block_map.size())};
  for (std::size_t i = 0; i < f.point_map.size(); ++i)
    h.point_map[f.point_map[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < f.block_map.size(); ++i)
    h.block_map[f.block_map[i]] = static_cast<int>(i);
  return h;
}

bool is_isomorphism(const MobiusPair& M1, const MobiusPair& M2, const IsoMap& f) {
  const int n = M1.n();
  if (M2.n() != n) return false;
  for (int b = 0; b < 2 * n; ++b) {
    Bits image(2 * n);
    M1.block_points(b).for_each([&](int p) { image.set(f.point_map[p]); });
    if (image != M2.block_points(f.block_map[b])) return false;
  }
  return true;
}

config::ElementMap to_element_map(const IsoMap& f, int n) {
  config::ElementMap m{n, std::vector<int>(4 * n)};
  for (int p = 0; p < 2 * n; ++p) m.to[p] = f.point_map[p];
  for (int b = 0; b < 2 * n; ++b) m.to[2 * n + b] = 2 * n + f.block_map[b];
  return m;
}

IsoMap from_element_map(const config::ElementMap& f) {
  const int n = f.n;
  IsoMap m{std::vector<int>(2 * n), std::vector<int>(2 * n)};
  for (int p = 0; p < 2 * n; ++p) m.point_map[p] = f.to[p];
  for (int b = 0; b < 2 * n; ++b) m.block_map[b] = f.to[2 * n + b] - 2 * n;
  return m;
}

namespace {

// Iterated neighbor-count refinement of the point/block coloring, run jointly
// on both graphs so cell ids agree. Returns false when the cell signature
// multisets differ, which already rules out an isomorphism.
bool refine_cells(const levi::LeviGraph& G1, const levi::LeviGraph& G2,
                  std::vector<int>& c1, std::vector<int>& c2) {
  const int V = G1.vertex_count();
  c1.assign(V, 0);
  c2.assign(V, 0);
  for (int v = 0; v < V; ++v) {
    c1[v] = G1.is_point_vertex(v) ? 0 : 1;
    c2[v] = G2.is_point_vertex(v) ? 0 : 1;
  }
  int ncells = 2;
  for (;;) {
    using Sig = std::vector<int>;
    auto signature = [&](const levi::LeviGraph& G, const std::vector<int>& c, int v) {
      Sig s(ncells + 1, 0);
      s[0] = c[v];
      G.adj[v].for_each([&](int u) { ++s[1 + c[u]]; });
      return s;
    };
    std::map<Sig, int> ids;
    std::vector<Sig> s1(V), s2(V);
    for (int v = 0; v < V; ++v) {
      s1[v] = signature(G1, c1, v);
      s2[v] = signature(G2, c2, v);
      ids.emplace(s1[v], 0);
      ids.emplace(s2[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> n1(V), n2(V);
    std::vector<int> size1(next, 0), size2(next, 0);
    for (int v = 0; v < V; ++v) {
      n1[v] = ids[s1[v]];
      n2[v] = ids[s2[v]];
      ++size1[n1[v]];
      ++size2[n2[v]];
    }
    if (size1 != size2) return false;
    if (next == ncells && n1 == c1 && n2 == c2) return true;
    c1 = std::move(n1);
    c2 = std::move(n2);
    ncells = next;
  }
}

struct Search {
  const levi::LeviGraph* G1;
  const levi::LeviGraph* G2;
  int V;
  std::vector<int> order;        // source vertices, by (cell, id)
  std::vector<Bits> init_cand;   // per source vertex
  std::optional<std::size_t> limit;
  std::vector<std::vector<int>> found;  // complete vertex maps

  bool dfs(int depth, const std::vector<Bits>& cand, std::vector<int>& vmap, const Bits& used) {
    if (depth == V) {
      found.push_back(vmap);
      return !limit || found.size() < *limit;
    }
    const int u = order[depth];
    Bits options = cand[u];
    options.and_not(used);
    std::vector<int> opts = options.to_list();
    for (int v : opts) {
      std::vector<Bits> next = cand;
      Bits used2 = used;
      used2.set(v);
      bool viable = true;
      for (int d = depth + 1; d < V && viable; ++d) {
        const int w = order[d];
        if (G1->adj[u].test(w))
          next[w] &= G2->adj[v];
        else
          next[w].and_not(G2->adj[v]);
        Bits remaining = next[w];
        remaining.and_not(used2);
        if (remaining.none()) viable = false;
      }
      if (!viable) continue;
      vmap[u] = v;
      if (!dfs(depth + 1, next, vmap, used2)) return false;
    }
    return true;
  }
};

std::vector<IsoMap> run_search(const MobiusPair& M1, const MobiusPair& M2,
                               std::optional<std::size_t> limit, int threads) {
  const int n = M1.n();
  std::vector<IsoMap> out;
  if (M2.n() != n) return out;
  if (limit && *limit == 0) return out;

  const levi::LeviGraph G1 = levi::levi_graph(M1);
  const levi::LeviGraph G2 = levi::levi_graph(M2);
  const int V = 4 * n;

  std::vector<int> c1, c2;
  if (!refine_cells(G1, G2, c1, c2)) return out;

  std::vector<int> order(V);
  for (int v = 0; v < V; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c1[a] < c1[b]; });

  std::vector<Bits> init_cand(V, Bits(V));
  for (int u = 0; u < V; ++u)
    for (int v = 0; v < V; ++v)
      if (c1[u] == c2[v]) init_cand[u].set(v);

  auto collect = [&](const std::vector<std::vector<int>>& maps) {
    for (const auto& vmap : maps) {
      IsoMap f{std::vector<int>(2 * n), std::vector<int>(2 * n)};
      for (int p = 0; p < 2 * n; ++p) f.point_map[p] = vmap[p];
      for (int b = 0; b < 2 * n; ++b) f.block_map[b] = vmap[2 * n + b] - 2 * n;
      out.push_back(std::move(f));
    }
  };

  if (limit) threads = 1;
  if (threads <= 1) {
    Search s{&G1, &G2, V, order, init_cand, limit, {}};
    std::vector<int> vmap(V, -1);
    s.dfs(0, init_cand, vmap, Bits(V));
    collect(s.found);
  } else {
    // Fan out over the first vertex's candidates; branch order fixes the
    // merge order so the result is independent of scheduling.
    const int u0 = order[0];
    std::vector<int> branches = init_cand[u0].to_list();
    std::vector<std::vector<std::vector<int>>> per_branch(branches.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= branches.size()) return;
        const int v0 = branches[idx];
        Search s{&G1, &G2, V, order, init_cand, std::nullopt, {}};
        std::vector<Bits> cand = init_cand;
        Bits used(V);
        used.set(v0);
        bool viable = true;
        for (int d = 1; d < V && viable; ++d) {
          const int w = order[d];
          if (G1.adj[u0].test(w))
            cand[w] &= G2.adj[v0];
          else
            cand[w].and_not(G2.adj[v0]);
          Bits remaining = cand[w];
          remaining.and_not(used);
          if (remaining.none()) viable = false;
        }
        if (!viable) continue;
        std::vector<int> vmap(V, -1);
        vmap[u0] = v0;
        s.dfs(1, cand, vmap, used);
        per_branch[idx] = std::move(s.found);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& maps : per_branch) collect(maps);
  }

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IsoMap> find_isomorphisms(const MobiusPair& M1, const MobiusPair& M2,
                                      std::optional<std::size_t> limit, int threads) {
  return run_search(M1, M2, limit, threads);
}

std::vector<IsoMap> automorphisms(const MobiusPair& M, int threads) {
  auto autos = run_search(M, M, std::nullopt, threads);
  const int n = M.n();

  const IsoMap id = identity_iso(n);
  if (!std::binary_search(autos.begin(), autos.end(), id))
    throw error("internal: identity missing from automorphism set");
  for (const auto& f : autos)
    if (!std::binary_search(autos.begin(), autos.end(), inverse(f)))
      throw error("internal: automorphism set not closed under inverse");

  // Full closure is quadratic in the group order; past a few thousand maps
  // check a deterministic stride of products instead.
  const std::size_t m = autos.size();
  if (m <= 2000) {
    for (const auto& f : autos)
      for (const auto& g : autos)
        if (!std::binary_search(autos.begin(), autos.end(), compose(f, g)))
          throw error("internal: automorphism set not closed under composition");
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      const auto& f = autos[i];
      const auto& g = autos[(i * 2654435761u + 1) % m];
      if (!std::binary_search(autos.begin(), autos.end(), compose(f, g)))
        throw error("internal: automorphism set not closed under composition");
    }
  }
  return autos;
}

namespace {

std::optional<DecompositionPair> evaluate_side(int npoints, const std::vector<Bits>& blocks,
                                               const Bits& P) {
  const int n = npoints / 2;
  Bits Q(npoints);
  for (int i = 0; i < npoints; ++i)
    if (!P.test(i)) Q.set(i);

  DecompositionPair d;
  Bits seen_p(npoints), seen_q(npoints);
  for (int b = 0; b < 2 * n; ++b) {
    const int in_p = Bits::and_count(blocks[b], P);
    if (in_p == n - 1) {
      Bits omitted = P;
      omitted.and_not(blocks[b]);
      const int pt = omitted.first();
      if (seen_p.test(pt)) return std::nullopt;
      seen_p.set(pt);
      d.p_blocks.push_back(b);
      d.p_omits.push_back(pt);
    } else if (in_p == 1) {
      Bits omitted = Q;
      omitted.and_not(blocks[b]);
      if (omitted.count() != 1) return std::nullopt;
      const int pt = omitted.first();
      if (seen_q.test(pt)) return std::nullopt;
      seen_q.set(pt);
      d.q_blocks.push_back(b);
      d.q_omits.push_back(pt);
    } else {
      return std::nullopt;
    }
  }
  if (static_cast<int>(d.p_blocks.size()) != n) return std::nullopt;
  if (static_cast<int>(d.q_blocks.size()) != n) return std::nullopt;
  d.p_points = P.to_list();
  d.q_points = Q.to_list();
  return d;
}

}  // namespace

std::vector<DecompositionPair> enumerate_decompositions_raw(int npoints,
                                                            const std::vector<Bits>& blocks,
                                                            int threads) {
  if (npoints < 6 || npoints % 2 != 0 || blocks.size() != static_cast<std::size_t>(npoints))
    return {};
  const int n = npoints / 2;
  std::vector<Bits> candidates;
  // All n-subsets containing point 0, in lexicographic order of their sorted
  // element lists.
  std::vector<int> pick{0};
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == n) {
      Bits P(npoints);
      for (int i : pick) P.set(i);
      candidates.push_back(std::move(P));
      return;
    }
    for (int i = from; i < npoints; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);

  std::vector<std::optional<DecompositionPair>> results(candidates.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      results[i] = evaluate_side(npoints, blocks, candidates[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= candidates.size()) return;
        results[i] = evaluate_side(npoints, blocks, candidates[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<DecompositionPair> out;
  for (auto& r : results)
    if (r) out.push_back(std::move(*r));
  return out;
}

std::vector<DecompositionPair> enumerate_decompositions(const MobiusPair& M, int threads) {
  return enumerate_decompositions_raw(2 * M.n(), M.blocks(), threads);
}

DecompositionPair defining_decomposition(const MobiusPair& M) {
  const int n = M.n();
  DecompositionPair d;
  for (int i = 0; i < n; ++i) {
    d.p_points.push_back(i);
    d.q_points.push_back(n + i);
    d.p_blocks.push_back(i);          // A_i omits a_i on the a-side
    d.p_omits.push_back(i);
    d.q_blocks.push_back(n + i);      // B_i omits b_i on the b-side
    d.q_omits.push_back(n + i);
  }
  return d;
}

DecompositionPair apply_iso(const DecompositionPair& d, const IsoMap& f) {
  DecompositionPair m;
  auto map_side = [&](const std::vector<int>& pts, const std::vector<int>& blks,
                      const std::vector<int>& omits, std::vector<int>& opts,
                      std::vector<int>& oblks, std::vector<int>& oomits) {
    opts.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) opts[i] = f.point_map[pts[i]];
    std::sort(opts.begin(), opts.end());
    std::vector<std::pair<int, int>> pairs(blks.size());
    for (std::size_t i = 0; i < blks.size(); ++i)
      pairs[i] = {f.block_map[blks[i]], f.point_map[omits[i]]};
    std::sort(pairs.begin(), pairs.end());
    oblks.resize(pairs.size());
    oomits.resize(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      oblks[i] = pairs[i].first;
      oomits[i] = pairs[i].second;
    }
  };
  map_side(d.p_points, d.p_blocks, d.p_omits, m.p_points, m.p_blocks, m.p_omits);
  map_side(d.q_points, d.q_blocks, d.q_omits, m.q_points, m.q_blocks, m.q_omits);
  const bool p_first = std::binary_search(m.p_points.begin(), m.p_points.end(), 0);
  if (!p_first) {
    std::swap(m.p_points, m.q_points);
    std::swap(m.p_blocks, m.q_blocks);
    std::swap(m.p_omits, m.q_omits);
  }
  return m;
}

std::vector<int> find_block_cycles(const MobiusPair& M) {
  const int n = M.n();
  std::vector<int> type;

  // Fixed points show up as disjoint A_i, B_i rather than as closed paths.
  for (int i = 0; i < n; ++i)
    if (Bits::and_count(M.block_points(i), M.block_points(n + i)) == 0) type.push_back(1);

  // One-point intersections between an A-block and a B-block.
  std::vector<std::vector<int>> nbr(2 * n);
  for (int a = 0; a < n; ++a)
    for (int b = n; b < 2 * n; ++b)
      if (Bits::and_count(M.block_points(a), M.block_points(b)) == 1) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
      }

  // Simple cycles, canonicalized: smallest block first, second smaller than
  // last to kill the reflected traversal.
  std::vector<char> in_path(2 * n, 0);
  std::vector<int> path;
  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (int w : nbr[v]) {
      if (w == start && path.size() >= 4) {
        if (path[1] < path.back()) type.push_back(static_cast<int>(path.size()) / 2);
        continue;
      }
      if (w <= start || in_path[w]) continue;
      in_path[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      in_path[w] = 0;
    }
  };
  for (int s = 0; s < 2 * n; ++s) {
    path.assign(1, s);
    in_path.assign(2 * n, 0);
    in_path[s] = 1;
    dfs(dfs, s, s);
  }

  std::sort(type.begin(), type.end());
  return type;
}

}  // namespace mobius::oracle
