#include "mobius/analysis.hpp"

#include <algorithm>
#include <set>

namespace mobius::analysis {

using config::ElementId;
using config::ElementKind;
using config::MobiusPair;

IntersectionProfile intersection_profile(const MobiusPair& M) {
  const int n = M.n();
  IntersectionProfile prof;
  prof.n = n;
  for (int k = 0; k < 2 * n; ++k)
    for (int l = k + 1; l < 2 * n; ++l) {
      const int size = Bits::and_count(M.block_points(k), M.block_points(l));
      ++prof.size_counts[size];
      const bool k_is_a = k < n, l_is_a = l < n;
      if (k_is_a == l_is_a) {
        if (size != n - 2)
          throw error("same-side blocks " + std::to_string(k) + "," + std::to_string(l) +
                      " intersect in " + std::to_string(size) + " points, expected " +
                      std::to_string(n - 2));
        ++prof.same_side_pairs;
      } else {
        const int i = (k_is_a ? k : l) + 1;      // A_i
        const int j = (k_is_a ? l : k) - n + 1;  // B_j
        const int pj = M.phi()(j);
        int expected;
        if (pj == i && i == j)
          expected = 0;
        else if ((pj == i && i != j) || (pj != i && i == j))
          expected = 1;
        else
          expected = 2;
        if (size != expected)
          throw error("blocks A" + std::to_string(i) + ",B" + std::to_string(j) +
                      " intersect in " + std::to_string(size) + " points, expected " +
                      std::to_string(expected));
        if (expected == 0)
          ++prof.ab_case_disjoint;
        else if (expected == 1)
          ++prof.ab_case_one;
        else
          ++prof.ab_case_two;
      }
    }
  return prof;
}

int blocks_through_points(const MobiusPair& M, const ElementId& x, const ElementId& y) {
  if (x == y) throw error("points must be distinct, got " + config::name(x) + " twice");
  const int px = config::point_id(x, M.n());
  const int py = config::point_id(y, M.n());
  int count = 0;
  for (int b = 0; b < 2 * M.n(); ++b)
    if (M.block_points(b).test(px) && M.block_points(b).test(py)) ++count;
  return count;
}

std::vector<ElementId> cycle_path(const MobiusPair& M, const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 2)
    throw error("cycle paths need length at least 2; fixed points have disjoint A_i, B_i");
  for (int j = 0; j < k; ++j) {
    const int cur = cycle[j], nxt = cycle[(j + 1) % k];
    if (cur < 1 || cur > M.n() || M.phi()(cur) != nxt)
      throw error("(" + std::to_string(cur) + " ...) is not a cycle of phi");
  }
  std::vector<ElementId> path;
  for (int j = 0; j < k; ++j) {
    path.push_back({ElementKind::BlockA, cycle[j]});
    path.push_back({ElementKind::BlockB, cycle[j]});
  }
  for (std::size_t j = 0; j < path.size(); ++j) {
    const int b1 = config::block_id(path[j], M.n());
    const int b2 = config::block_id(path[(j + 1) % path.size()], M.n());
    const int size = Bits::and_count(M.block_points(b1), M.block_points(b2));
    if (size != 1)
      throw error("consecutive blocks " + config::name(path[j]) + "," +
                  config::name(path[(j + 1) % path.size()]) + " share " +
                  std::to_string(size) + " points, expected 1");
  }
  return path;
}

std::optional<oracle::IsoMap> isomorphic(const MobiusPair& M1, const MobiusPair& M2) {
  if (M1.n() != M2.n()) return std::nullopt;
  const auto alpha = perm::are_conjugate(M1.phi(), M2.phi());
  if (!alpha) return std::nullopt;
  const int n = M1.n();
  oracle::IsoMap f{std::vector<int>(2 * n), std::vector<int>(2 * n)};
  for (int i = 1; i <= n; ++i) {
    const int ai = (*alpha)(i);
    f.point_map[i - 1] = ai - 1;
    f.point_map[n + i - 1] = n + ai - 1;
    f.block_map[i - 1] = ai - 1;
    f.block_map[n + i - 1] = n + ai - 1;
  }
  if (!oracle::is_isomorphism(M1, M2, f))
    throw error("internal: conjugacy witness did not induce an isomorphism");
  return f;
}

std::vector<oracle::DecompositionPair> special_decompositions(const MobiusPair& M) {
  const int n = M.n();
  if (n != 4) return {};
  std::vector<oracle::DecompositionPair> out;
  for (const auto& X : perm::invariant_subsets(M.phi(), 2)) {
    if (std::find(X.begin(), X.end(), 1) == X.end()) continue;  // complement pairing
    Bits in_x(n + 1);
    for (int i : X) in_x.set(i);
    oracle::DecompositionPair d;
    // One simplex: points a_x for x in X and b_y otherwise; blocks B_x and A_y.
    for (int i = 1; i <= n; ++i) {
      if (in_x.test(i)) {
        d.p_points.push_back(i - 1);
        d.p_blocks.push_back(n + i - 1);  // B_i, omits the other a-point of X
        d.q_points.push_back(n + i - 1);
        d.q_blocks.push_back(i - 1);      // A_i
      } else {
        d.p_points.push_back(n + i - 1);
        d.p_blocks.push_back(i - 1);      // A_i
        d.q_points.push_back(i - 1);
        d.q_blocks.push_back(n + i - 1);  // B_i
      }
    }
    std::sort(d.p_points.begin(), d.p_points.end());
    std::sort(d.q_points.begin(), d.q_points.end());
    std::sort(d.p_blocks.begin(), d.p_blocks.end());
    std::sort(d.q_blocks.begin(), d.q_blocks.end());
    Bits P(2 * n), Q(2 * n);
    for (int p : d.p_points) P.set(p);
    for (int q : d.q_points) Q.set(q);
    auto omit = [&](int block, const Bits& side) {
      Bits omitted = side;
      omitted.and_not(M.block_points(block));
      if (omitted.count() != 1)
        throw error("internal: special decomposition block omits " +
                    std::to_string(omitted.count()) + " points");
      return omitted.first();
    };
    std::set<int> seen_p, seen_q;
    for (int b : d.p_blocks) {
      if (Bits::and_count(M.block_points(b), P) != n - 1)
        throw error("internal: special decomposition side is not a simplex");
      d.p_omits.push_back(omit(b, P));
      seen_p.insert(d.p_omits.back());
    }
    for (int b : d.q_blocks) {
      if (Bits::and_count(M.block_points(b), Q) != n - 1)
        throw error("internal: special decomposition side is not a simplex");
      d.q_omits.push_back(omit(b, Q));
      seen_q.insert(d.q_omits.back());
    }
    if (static_cast<int>(seen_p.size()) != n || static_cast<int>(seen_q.size()) != n)
      throw error("internal: special decomposition omission map is not a bijection");
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> subpair_sets(const MobiusPair& M, int k) {
  if (k < 3 || k >= M.n())
    throw error("subpair size k = " + std::to_string(k) + " out of range 3.." +
                std::to_string(M.n() - 1));
  return perm::invariant_subsets(M.phi(), M.n() - k);
}

SubpairResult extract_subpair(const MobiusPair& M, const std::vector<int>& X) {
  const int n = M.n();
  std::vector<int> sorted_x = X;
  std::sort(sorted_x.begin(), sorted_x.end());

  Bits in_x(n + 1);
  for (int i : sorted_x) {
    if (i < 1 || i > n) throw error("deleted index " + std::to_string(i) + " out of range");
    in_x.set(i);
  }
  for (int i : sorted_x)
    if (!in_x.test(M.phi()(i)))
      throw error("deletion set is not phi-invariant: phi(" + std::to_string(i) + ") = " +
                  std::to_string(M.phi()(i)) + " is not deleted");

  const int k = n - static_cast<int>(sorted_x.size());
  if (k < 3) throw error("deletion leaves k = " + std::to_string(k) + " < 3 indices");

  std::vector<int> relabel(n, 0);
  std::vector<int> kept;
  for (int i = 1, next = 1; i <= n; ++i)
    if (!in_x.test(i)) {
      relabel[i - 1] = next++;
      kept.push_back(i);
    }

  std::vector<int> induced_images(k);
  for (int i : kept) induced_images[relabel[i - 1] - 1] = relabel[M.phi()(i) - 1];
  perm::Permutation induced = perm::Permutation::from_images(std::move(induced_images));

  // Restrict the surviving blocks to the surviving points and relabel; the
  // result must coincide with the direct construction block for block.
  std::vector<Bits> restricted(2 * k, Bits(2 * k));
  for (int i : kept) {
    const int bi = relabel[i - 1];
    for (int kind = 0; kind < 2; ++kind) {
      const Bits& row = M.block_points(kind * n + i - 1);
      Bits& out_row = restricted[kind * k + bi - 1];
      for (int j : kept) {
        if (row.test(j - 1)) out_row.set(relabel[j - 1] - 1);
        if (row.test(n + j - 1)) out_row.set(k + relabel[j - 1] - 1);
      }
    }
  }
  MobiusPair rebuilt = config::build(k, induced);
  if (restricted != rebuilt.blocks())
    throw error("internal: restricted blocks differ from the direct construction");

  return {std::move(sorted_x), std::move(rebuilt), std::move(relabel), std::move(induced)};
}

RawStructure to_raw(const MobiusPair& M) {
  const int n = M.n();
  RawStructure raw;
  for (int p = 0; p < 2 * n; ++p)
    raw.points.push_back(config::name(config::point_from_id(p, n)));
  for (int b = 0; b < 2 * n; ++b) {
    std::vector<std::string> names;
    M.block_points(b).for_each(
        [&](int p) { names.push_back(config::name(config::point_from_id(p, n))); });
    std::sort(names.begin(), names.end());
    raw.blocks.push_back(std::move(names));
  }
  return raw;
}

RawStructure delete_indices(const MobiusPair& M, const std::vector<int>& X) {
  const int n = M.n();
  Bits drop_point(2 * n);
  for (int i : X) {
    if (i < 1 || i > n) throw error("deleted index " + std::to_string(i) + " out of range");
    drop_point.set(i - 1);
    drop_point.set(n + i - 1);
  }
  RawStructure raw;
  for (int p = 0; p < 2 * n; ++p)
    if (!drop_point.test(p)) raw.points.push_back(config::name(config::point_from_id(p, n)));
  for (int b = 0; b < 2 * n; ++b) {
    const int index = b % n + 1;
    if (std::find(X.begin(), X.end(), index) != X.end()) continue;
    std::vector<std::string> names;
    M.block_points(b).for_each([&](int p) {
      if (!drop_point.test(p)) names.push_back(config::name(config::point_from_id(p, n)));
    });
    std::sort(names.begin(), names.end());
    raw.blocks.push_back(std::move(names));
  }
  return raw;
}

std::optional<RecognizeResult> recognize(const RawStructure& S) {
  const int npoints = static_cast<int>(S.points.size());
  if (npoints < 6 || npoints % 2 != 0) return std::nullopt;
  const int n = npoints / 2;
  if (static_cast<int>(S.blocks.size()) != 2 * n) return std::nullopt;

  std::vector<std::string> sorted_names = S.points;
  std::sort(sorted_names.begin(), sorted_names.end());
  if (std::adjacent_find(sorted_names.begin(), sorted_names.end()) != sorted_names.end())
    return std::nullopt;
  std::map<std::string, int> index_of;
  for (int i = 0; i < npoints; ++i) index_of[sorted_names[i]] = i;

  std::vector<Bits> blocks(2 * n, Bits(npoints));
  for (int b = 0; b < 2 * n; ++b) {
    for (const auto& name : S.blocks[b]) {
      const auto it = index_of.find(name);
      if (it == index_of.end()) return std::nullopt;
      if (blocks[b].test(it->second)) return std::nullopt;
      blocks[b].set(it->second);
    }
    if (blocks[b].count() != n) return std::nullopt;
  }
  for (int b1 = 0; b1 < 2 * n; ++b1)
    for (int b2 = b1 + 1; b2 < 2 * n; ++b2)
      if (blocks[b1] == blocks[b2]) return std::nullopt;
  for (int p = 0; p < npoints; ++p) {
    int rank = 0;
    for (const auto& block : blocks) rank += block.test(p);
    if (rank != n) return std::nullopt;
  }

  const auto decs = oracle::enumerate_decompositions_raw(npoints, blocks);
  if (decs.empty()) return std::nullopt;
  const auto& d = decs.front();

  // Label the side with the smallest point name as the a-side, read the
  // permutation from the unique cross-incidences, rebuild and compare.
  std::vector<int> a_of(n), b_of(n), A_of(n), B_of(n);
  for (int i = 0; i < n; ++i) a_of[i] = d.p_points[i];
  for (int i = 0; i < n; ++i) {
    const int pos = static_cast<int>(
        std::find(d.p_omits.begin(), d.p_omits.end(), a_of[i]) - d.p_omits.begin());
    if (pos == n) return std::nullopt;
    A_of[i] = d.p_blocks[pos];
    Bits rest = blocks[A_of[i]];
    for (int q : d.p_points) rest.reset(q);
    if (rest.count() != 1) return std::nullopt;
    b_of[i] = rest.first();
  }
  std::vector<int> phi_images(n, 0);
  for (int i = 0; i < n; ++i) {
    const int pos = static_cast<int>(
        std::find(d.q_omits.begin(), d.q_omits.end(), b_of[i]) - d.q_omits.begin());
    if (pos == n) return std::nullopt;
    B_of[i] = d.q_blocks[pos];
    Bits rest = blocks[B_of[i]];
    for (int q : d.q_points) rest.reset(q);
    if (rest.count() != 1) return std::nullopt;
    const int ap = rest.first();
    const auto it = std::find(a_of.begin(), a_of.end(), ap);
    if (it == a_of.end()) return std::nullopt;
    phi_images[i] = static_cast<int>(it - a_of.begin()) + 1;
  }

  perm::Permutation phi(1);
  try {
    phi = perm::Permutation::from_images(phi_images);
  } catch (const error&) {
    return std::nullopt;
  }
  const MobiusPair rebuilt = config::build(n, phi);

  RecognizeResult res;
  res.n = n;
  res.cycle_type = perm::cycle_decomposition(phi).cycle_type();
  for (int i = 0; i < n; ++i) {
    res.point_labels[sorted_names[a_of[i]]] = "a" + std::to_string(i + 1);
    res.point_labels[sorted_names[b_of[i]]] = "b" + std::to_string(i + 1);
  }
  res.block_labels.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    res.block_labels[A_of[i]] = "A" + std::to_string(i + 1);
    res.block_labels[B_of[i]] = "B" + std::to_string(i + 1);
  }

  // Cross-check the labeling against the direct construction.
  std::vector<int> input_of(2 * n);  // point eid in the rebuild -> input index
  for (int i = 0; i < n; ++i) {
    input_of[i] = a_of[i];
    input_of[n + i] = b_of[i];
  }
  for (int b = 0; b < 2 * n; ++b) {
    const int target = config::block_id(config::parse_element(res.block_labels[b]), n);
    Bits expect(npoints);
    rebuilt.block_points(target).for_each([&](int pid) { expect.set(input_of[pid]); });
    if (expect != blocks[b]) return std::nullopt;
  }
  return res;
}

}  // namespace mobius::analysis
