#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mobius/config.hpp"
#include "mobius/oracle.hpp"

namespace mobius::autgrp {

// Automorphism in normal form. Kind F preserves the two simplices, kind G
// interchanges them. Shifts and block permutations are stored per cycle-length
// class with 0-based t and k; shift[t][k] lives in Z_{nu_t} and alpha[t] is a
// permutation of {0..m_t-1}.
struct StructuredAut {
  enum class Kind : std::uint8_t { F, G };
  Kind kind;
  std::vector<std::vector<int>> shift;
  std::vector<std::vector<int>> alpha;

  auto operator<=>(const StructuredAut&) const = default;
};

StructuredAut identity_f(const perm::CycleDecomposition& cd);
StructuredAut g_zero(const perm::CycleDecomposition& cd);

// (t,k,i,eps) -> (t, alpha_t(k), i + v_k^t mod nu_t, eps); requires kind F.
config::Coord apply_f(const perm::CycleDecomposition& cd, const StructuredAut& s,
                      const config::Coord& c);
// For eps in {1,2}: (t,k,i,eps) -> (t, alpha_t(k), i + v_k^t - 1 mod nu_t, -eps);
// for eps in {-1,-2} the shift is v_k^t. Requires kind G.
config::Coord apply_g(const perm::CycleDecomposition& cd, const StructuredAut& s,
                      const config::Coord& c);
config::Coord apply(const perm::CycleDecomposition& cd, const StructuredAut& s,
                    const config::Coord& c);

oracle::IsoMap to_iso_map(const config::MobiusPair& M, const StructuredAut& s);

// All maps of both kinds over every shift vector and block permutation,
// each verified incidence-preserving; 2 * prod_t nu_t^{m_t} m_t! maps total.
std::vector<StructuredAut> structured_automorphisms(const config::MobiusPair& M);

struct NamedMap {
  std::string name;
  oracle::IsoMap map;
  auto operator<=>(const NamedMap&) const = default;
};

// For n = 4 with phi exactly (1)(2)(34) or exactly (12)(34): the tabulated
// extra automorphism (one per class) that moves the defining simplex pair to
// the special decomposition. Empty for every other input.
std::vector<NamedMap> special_maps_n4(const config::MobiusPair& M);

struct AutReport {
  int n = 0;
  std::string phi;
  std::uint64_t oracle_order = 0;
  std::uint64_t structured_order = 0;
  // Order of the group generated by the structured maps plus the tabulated
  // n = 4 extras; equals structured_order when there are none.
  std::uint64_t extended_order = 0;
  std::optional<std::uint64_t> paper_claimed_order;
  bool structured_equals_oracle = false;
  bool extended_equals_oracle = false;
  bool paper_matches_oracle = false;
  std::vector<std::string> generator_names;
};

// Computes the oracle group, the structured set, and the claimed order, and
// reports them side by side; claimed orders are never substituted for the
// enumerated ones.
AutReport aut_report(const config::MobiusPair& M, int threads = 1);

// Claimed order for the class of phi: the general product formula for n >= 5
// and the n = 4 classes it covers, the published constants for the remaining
// n = 4 classes, and 12 for n = 3.
std::uint64_t claimed_order(int n, const perm::CycleDecomposition& cd);

// Closure of a generating set under composition; input maps must be
// automorphisms of a common structure.
std::vector<oracle::IsoMap> generated_closure(std::vector<oracle::IsoMap> gens, int n);

}  // namespace mobius::autgrp
