#include "mobius/config.hpp"

#include <algorithm>
#include <cctype>

namespace mobius::config {

std::string name(const ElementId& e) {
  static constexpr const char* prefix[] = {"a", "b", "A", "B"};
  return std::string(prefix[static_cast<int>(e.kind)]) + std::to_string(e.index);
}

ElementId parse_element(const std::string& s) {
  if (s.size() < 2) throw parse_error("malformed element name '" + s + "'");
  ElementKind kind;
  switch (s[0]) {
    case 'a': kind = ElementKind::PointA; break;
    case 'b': kind = ElementKind::PointB; break;
    case 'A': kind = ElementKind::BlockA; break;
    case 'B': kind = ElementKind::BlockB; break;
    default: throw parse_error("malformed element name '" + s + "'");
  }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("malformed element name '" + s + "'");
  return {kind, std::stoi(s.substr(1))};
}

int eid(const ElementId& e, int n) {
  return static_cast<int>(e.kind) * n + e.index - 1;
}

ElementId from_eid(int id, int n) {
  return {static_cast<ElementKind>(id / n), id % n + 1};
}

int point_id(const ElementId& e, int n) {
  if (!is_point(e.kind)) throw error(name(e) + " is not a point");
  return eid(e, n);
}

int block_id(const ElementId& e, int n) {
  if (!is_block(e.kind)) throw error(name(e) + " is not a block");
  return eid(e, n) - 2 * n;
}

ElementId point_from_id(int id, int n) { return from_eid(id, n); }
ElementId block_from_id(int id, int n) { return from_eid(id + 2 * n, n); }

MobiusPair build(int n, perm::Permutation phi) {
  if (n < 3) throw error("n must be at least 3, got " + std::to_string(n));
  if (phi.degree() != n)
    throw error("permutation degree " + std::to_string(phi.degree()) +
                " does not match n = " + std::to_string(n));
  MobiusPair M;
  M.n_ = n;
  M.phi_ = std::move(phi);
  M.blocks_.assign(2 * n, Bits(2 * n));
  for (int i = 1; i <= n; ++i) {
    Bits& Ai = M.blocks_[i - 1];
    for (int j = 1; j <= n; ++j)
      if (j != i) Ai.set(j - 1);
    Ai.set(n + i - 1);
    Bits& Bi = M.blocks_[n + i - 1];
    for (int j = 1; j <= n; ++j)
      if (j != i) Bi.set(n + j - 1);
    Bi.set(M.phi_(i) - 1);
  }
  M.cyc_ = perm::cycle_decomposition(M.phi_);
  M.pos_.resize(n);
  for (int t = 0; t < M.cyc_.classes(); ++t)
    for (std::size_t k = 0; k < M.cyc_.domains[t].size(); ++k) {
      const auto& dom = M.cyc_.domains[t][k];
      for (std::size_t i = 0; i < dom.size(); ++i)
        M.pos_[dom[i] - 1] = {t + 1, static_cast<int>(k) + 1, static_cast<int>(i)};
    }
  return M;
}

bool incident(const MobiusPair& M, const ElementId& p, const ElementId& b) {
  if (!is_point(p.kind)) throw error(name(p) + " is not a point");
  if (!is_block(b.kind)) throw error(name(b) + " is not a block");
  return M.block_points(block_id(b, M.n())).test(point_id(p, M.n()));
}

Coord coord_of(const MobiusPair& M, const ElementId& e) {
  if (e.index < 1 || e.index > M.n()) throw error("element index out of range: " + name(e));
  const auto& pos = M.pos_[e.index - 1];
  static constexpr int eps_of[] = {1, -1, 2, -2};
  return {pos[0], pos[1], pos[2], eps_of[static_cast<int>(e.kind)]};
}

ElementId element_of(const MobiusPair& M, const Coord& c) {
  const auto& cd = M.cycles();
  if (c.t < 1 || c.t > cd.classes()) throw error("coordinate t out of range");
  if (c.k < 1 || c.k > cd.multiplicities[c.t - 1]) throw error("coordinate k out of range");
  if (c.i < 0 || c.i >= cd.lengths[c.t - 1]) throw error("coordinate i out of range");
  const int index = cd.domains[c.t - 1][c.k - 1][c.i];
  switch (c.eps) {
    case 1: return {ElementKind::PointA, index};
    case -1: return {ElementKind::PointB, index};
    case 2: return {ElementKind::BlockA, index};
    case -2: return {ElementKind::BlockB, index};
    default: throw error("coordinate eps must be one of {1,-1,2,-2}");
  }
}

ElementMap compose(const ElementMap& f, const ElementMap& g) {
  ElementMap h{f.n, std::vector<int>(f.to.size())};
  for (std::size_t i = 0; i < g.to.size(); ++i) h.to[i] = f.to[g.to[i]];
  return h;
}

ElementMap inverse_map(const ElementMap& f) {
  ElementMap h{f.n, std::vector<int>(f.to.size())};
  for (std::size_t i = 0; i < f.to.size(); ++i) h.to[f.to[i]] = static_cast<int>(i);
  return h;
}

bool preserves_incidence(const MobiusPair& M1, const MobiusPair& M2, const ElementMap& f) {
  const int n = M1.n();
  if (M2.n() != n || f.n != n) return false;
  for (int p = 0; p < 2 * n; ++p) {
    const ElementId fp = from_eid(f.to[p], n);
    if (!is_point(fp.kind)) return false;
    for (int b = 0; b < 2 * n; ++b) {
      const ElementId fb = from_eid(f.to[2 * n + b], n);
      if (!is_block(fb.kind)) return false;
      if (M1.block_points(b).test(p) !=
          M2.block_points(block_id(fb, n)).test(point_id(fp, n)))
        return false;
    }
  }
  return true;
}

bool transposes_incidence(const MobiusPair& M1, const MobiusPair& M2, const ElementMap& f) {
  const int n = M1.n();
  if (M2.n() != n || f.n != n) return false;
  for (int p = 0; p < 2 * n; ++p) {
    const ElementId fp = from_eid(f.to[p], n);
    if (!is_block(fp.kind)) return false;
    for (int b = 0; b < 2 * n; ++b) {
      const ElementId fb = from_eid(f.to[2 * n + b], n);
      if (!is_point(fb.kind)) return false;
      if (M1.block_points(b).test(p) !=
          M2.block_points(block_id(fp, n)).test(point_id(fb, n)))
        return false;
    }
  }
  return true;
}

namespace {

// x_i -> x_{s(i)} on all four families.
ElementMap relabel_map(int n, const perm::Permutation& s) {
  ElementMap f{n, std::vector<int>(4 * n)};
  for (int id = 0; id < 4 * n; ++id) {
    ElementId e = from_eid(id, n);
    e.index = s(e.index);
    f.to[id] = eid(e, n);
  }
  return f;
}

// Reverses each cycle of the decomposition in place: the anchor stays fixed
// and the remaining positions flip, which conjugates the permutation to its
// inverse.
perm::Permutation per_cycle_reversal(const perm::CycleDecomposition& cd) {
  std::vector<int> im(cd.n);
  for (const auto& per_len : cd.domains)
    for (const auto& dom : per_len) {
      const int len = static_cast<int>(dom.size());
      im[dom[0] - 1] = dom[0];
      for (int i = 1; i < len; ++i) im[dom[i] - 1] = dom[len - i];
    }
  return perm::Permutation::from_images(std::move(im));
}

}  // namespace

DualResult dual(const MobiusPair& M) {
  const int n = M.n();
  const perm::Permutation psi = M.phi().inverse();
  MobiusPair D = build(n, psi);

  // Point<->block exchange realizing the transposed structure over phi^{-1}:
  //   a_j -> A'_j,  b_j -> B'_{phi(j)},  A_i -> a'_i,  B_i -> b'_{phi(i)}.
  ElementMap duality{n, std::vector<int>(4 * n)};
  for (int j = 1; j <= n; ++j) {
    duality.to[eid({ElementKind::PointA, j}, n)] = eid({ElementKind::BlockA, j}, n);
    duality.to[eid({ElementKind::PointB, j}, n)] = eid({ElementKind::BlockB, M.phi()(j)}, n);
    duality.to[eid({ElementKind::BlockA, j}, n)] = eid({ElementKind::PointA, j}, n);
    duality.to[eid({ElementKind::BlockB, j}, n)] = eid({ElementKind::PointB, M.phi()(j)}, n);
  }
  if (!transposes_incidence(M, D, duality))
    throw error("internal: duality witness failed verification");

  std::vector<int> alpha_im(n);
  alpha_im[0] = 1;
  for (int m = 2; m <= n; ++m) alpha_im[m - 1] = n - m + 2;
  perm::Permutation alpha = perm::Permutation::from_images(std::move(alpha_im));

  const bool alpha_valid = perm::conjugate(psi, alpha) == M.phi();
  perm::Permutation conj = alpha;
  if (!alpha_valid) {
    perm::Permutation rev = per_cycle_reversal(M.cycles());
    if (perm::conjugate(psi, rev) == M.phi()) {
      conj = rev;
    } else {
      auto w = perm::are_conjugate(psi, M.phi());
      if (!w) throw error("internal: phi not conjugate to its inverse");
      conj = *w;
    }
  }

  ElementMap iso_from_dual = relabel_map(n, conj);
  if (!preserves_incidence(D, M, iso_from_dual))
    throw error("internal: dual-to-self isomorphism failed verification");

  ElementMap self_duality = compose(iso_from_dual, duality);
  if (!transposes_incidence(M, M, self_duality))
    throw error("internal: self-duality correlation failed verification");

  return {std::move(D), std::move(duality), std::move(alpha), alpha_valid,
          std::move(conj), std::move(iso_from_dual), std::move(self_duality)};
}

}  // namespace mobius::config
