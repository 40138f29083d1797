#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mobius/bits.hpp"
#include "mobius/error.hpp"
#include "mobius/perm.hpp"

namespace mobius::config {

enum class ElementKind : std::uint8_t { PointA, PointB, BlockA, BlockB };

constexpr bool is_point(ElementKind k) {
  return k == ElementKind::PointA || k == ElementKind::PointB;
}
constexpr bool is_block(ElementKind k) { return !is_point(k); }

struct ElementId {
  ElementKind kind;
  int index;  // 1..n
  auto operator<=>(const ElementId&) const = default;
};

std::string name(const ElementId& e);            // "a1", "b2", "A3", "B4"
ElementId parse_element(const std::string& s);

// Global element numbering a_1..a_n, b_1..b_n, A_1..A_n, B_1..B_n -> 0..4n-1.
int eid(const ElementId& e, int n);
ElementId from_eid(int id, int n);

// Point ids 0..2n-1 (a_i -> i-1, b_i -> n+i-1) and block ids 0..2n-1
// (A_i -> i-1, B_i -> n+i-1).
int point_id(const ElementId& e, int n);
int block_id(const ElementId& e, int n);
ElementId point_from_id(int id, int n);
ElementId block_from_id(int id, int n);

// Cycle coordinates: t-th length class (1-based), k-th cycle within it
// (1-based), position i along the cycle, and the element family
// eps = +1 (a), -1 (b), +2 (A), -2 (B).
struct Coord {
  int t;
  int k;
  int i;
  int eps;
  auto operator<=>(const Coord&) const = default;
};

// The configuration on points {a_i, b_i} with blocks
//   A_i = {a_j : j != i} u {b_i},   B_i = {b_j : j != i} u {a_phi(i)}.
class MobiusPair {
 public:
  int n() const { return n_; }
  const perm::Permutation& phi() const { return phi_; }
  const perm::CycleDecomposition& cycles() const { return cyc_; }

  // Point membership mask of a block, over point ids 0..2n-1.
  const Bits& block_points(int block) const { return blocks_[block]; }
  const std::vector<Bits>& blocks() const { return blocks_; }

  bool operator==(const MobiusPair& o) const {
    return n_ == o.n_ && phi_ == o.phi_ && blocks_ == o.blocks_;
  }

 private:
  friend MobiusPair build(int n, perm::Permutation phi);
  MobiusPair() = default;

  int n_ = 0;
  perm::Permutation phi_{1};
  std::vector<Bits> blocks_;
  perm::CycleDecomposition cyc_;
  std::vector<std::array<int, 3>> pos_;  // index-1 -> {t, k, i}, t/k 1-based

  friend Coord coord_of(const MobiusPair&, const ElementId&);
};

MobiusPair build(int n, perm::Permutation phi);

bool incident(const MobiusPair& M, const ElementId& p, const ElementId& b);

// Mutually inverse bijections between the 4n elements and valid coordinates.
Coord coord_of(const MobiusPair& M, const ElementId& e);
ElementId element_of(const MobiusPair& M, const Coord& c);

// Bijection between the elements of two pairs with equal n, stored over the
// global eid numbering. Used both for kind-preserving isomorphisms and for
// point<->block dualities.
struct ElementMap {
  int n = 0;
  std::vector<int> to;  // indexed by eid

  ElementId operator()(const ElementId& e) const { return from_eid(to[eid(e, n)], n); }
  auto operator<=>(const ElementMap&) const = default;
};

ElementMap compose(const ElementMap& f, const ElementMap& g);  // f after g
ElementMap inverse_map(const ElementMap& f);

// f maps points to points and blocks to blocks; checks p in b  <=>  f(p) in f(b).
bool preserves_incidence(const MobiusPair& M1, const MobiusPair& M2, const ElementMap& f);
// f maps points to blocks and blocks to points; checks p in b  <=>  f(b) in f(p).
bool transposes_incidence(const MobiusPair& M1, const MobiusPair& M2, const ElementMap& f);

struct DualResult {
  MobiusPair dual;               // the dual realized over phi^{-1}
  ElementMap duality;            // M -> dual, exchanges points and blocks; transposed-exact
  perm::Permutation alpha;       // the reversal 1 -> 1, m -> n-m+2
  bool alpha_valid;              // alpha o phi^{-1} o alpha^{-1} == phi
  perm::Permutation conjugator;  // conjugator actually used for iso_from_dual
  ElementMap iso_from_dual;      // dual -> M, kind-preserving, incidence-exact
  ElementMap self_duality;       // iso_from_dual o duality: a correlation of M
};

// Realizes the dual of M as build(n, phi^{-1}) with an explicit witness, plus
// an isomorphism back onto M, so that their composite exhibits self-duality.
// All three maps are verified before returning.
DualResult dual(const MobiusPair& M);

}  // namespace mobius::config
