#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "mobius/config.hpp"
#include "mobius/levi.hpp"

namespace mobius::oracle {

// Configuration isomorphism: points map to points, blocks to blocks, and a
// block's image equals the image of its point set.
struct IsoMap {
  std::vector<int> point_map;  // point ids 0..2n-1
  std::vector<int> block_map;  // block ids 0..2n-1
  auto operator<=>(const IsoMap&) const = default;
};

IsoMap identity_iso(int n);
IsoMap compose(const IsoMap& f, const IsoMap& g);  // f after g
IsoMap inverse(const IsoMap& f);
bool is_isomorphism(const config::MobiusPair& M1, const config::MobiusPair& M2,
                    const IsoMap& f);

config::ElementMap to_element_map(const IsoMap& f, int n);
IsoMap from_element_map(const config::ElementMap& f);

// All isomorphisms M1 -> M2 (or the first `limit` of them), found by
// backtracking over the Levi graphs with partition refinement and bitwise
// neighborhood propagation. Output sorted lexicographically by point_map.
// A limit forces the single-threaded search so the prefix is reproducible.
std::vector<IsoMap> find_isomorphisms(const config::MobiusPair& M1,
                                      const config::MobiusPair& M2,
                                      std::optional<std::size_t> limit = std::nullopt,
                                      int threads = 1);

// find_isomorphisms(M, M); identity presence, inverses and (for small groups
// exhaustively, for large ones on a deterministic sample) closure are checked
// before returning.
std::vector<IsoMap> automorphisms(const config::MobiusPair& M, int threads = 1);

// Two complementary point sets with their block sides and omission maps; the
// orientation is normalized so that the side containing point id 0 comes
// first, and blocks are listed ascending.
struct DecompositionPair {
  std::vector<int> p_points, q_points;  // sorted point ids
  std::vector<int> p_blocks, q_blocks;  // sorted block ids
  std::vector<int> p_omits, q_omits;    // omitted point per block, aligned

  auto operator<=>(const DecompositionPair&) const = default;
};

// Exhaustive scan over all n-subsets of the 2n points: a candidate side is
// valid when exactly n blocks meet it in n-1 points and the omitted points
// are pairwise distinct, on both sides. Unordered pairs are deduplicated by
// keeping the orientation whose first side contains a_1.
std::vector<DecompositionPair> enumerate_decompositions(const config::MobiusPair& M,
                                                        int threads = 1);

// Same scan over a bare block list (no permutation attached); used to
// recognize raw structures.
std::vector<DecompositionPair> enumerate_decompositions_raw(int npoints,
                                                            const std::vector<Bits>& blocks,
                                                            int threads = 1);

DecompositionPair defining_decomposition(const config::MobiusPair& M);

// Image of a decomposition under an automorphism, re-normalized.
DecompositionPair apply_iso(const DecompositionPair& d, const IsoMap& f);

// Closed alternating block sequences (half-lengths k >= 2, every two
// cyclically consecutive blocks sharing exactly one point), up to rotation
// and reflection, plus a 1 for every index with A_i and B_i disjoint.
// Returned sorted ascending.
std::vector<int> find_block_cycles(const config::MobiusPair& M);

}  // namespace mobius::oracle
