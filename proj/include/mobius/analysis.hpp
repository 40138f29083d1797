#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mobius/config.hpp"
#include "mobius/oracle.hpp"

namespace mobius::analysis {

// Intersection sizes over all unordered block pairs, with the (A_i, B_j)
// pairs classified by the condition on phi rather than by size alone (for
// n = 4 the size n-2 coincides with case three, for n = 3 with case two).
struct IntersectionProfile {
  int n = 0;
  std::map<int, long> size_counts;  // |k cap l| -> number of unordered pairs
  long same_side_pairs = 0;         // A-A and B-B pairs, all of size n-2
  long ab_case_disjoint = 0;        // phi(j) == i == j
  long ab_case_one = 0;             // phi(j) == i != j  or  phi(j) != i == j
  long ab_case_two = 0;             // phi(j) != i != j
};

// Throws when any pair violates the predicted case analysis; unreachable on
// a built configuration.
IntersectionProfile intersection_profile(const config::MobiusPair& M);

// Number of blocks containing both points; always 0, 1, 2 or n-2.
int blocks_through_points(const config::MobiusPair& M, const config::ElementId& x,
                          const config::ElementId& y);

// For a k-cycle (k >= 2) of phi: the closed block sequence
// A_{i1}, B_{i1}, ..., A_{ik}, B_{ik}; every two cyclically consecutive
// blocks are checked to share exactly one point.
std::vector<config::ElementId> cycle_path(const config::MobiusPair& M,
                                          const std::vector<int>& cycle);

// Isomorphism through conjugacy: a witness alpha with alpha phi1 alpha^{-1}
// = phi2 yields x_i -> x_{alpha(i)}; verified before returning.
std::optional<oracle::IsoMap> isomorphic(const config::MobiusPair& M1,
                                         const config::MobiusPair& M2);

// Decompositions other than the defining one, built from the invariant
// 2-sets; nonempty only for n = 4. X and its complement name the same
// decomposition, so only the X containing 1 is used.
std::vector<oracle::DecompositionPair> special_decompositions(const config::MobiusPair& M);

// Invariant index sets X with |X| = n-k, i.e. the deletion sets that leave a
// k-subpair. Requires 3 <= k < n.
std::vector<std::vector<int>> subpair_sets(const config::MobiusPair& M, int k);

struct SubpairResult {
  std::vector<int> deleted;          // X, ascending
  config::MobiusPair subpair;        // equals build(k, induced) exactly
  std::vector<int> relabel;          // relabel[i-1] = new label of i, 0 for deleted
  perm::Permutation induced;         // restriction of phi, relabeled
};

// Deletes a_i, b_i, A_i, B_i for i in X, relabels I \ X order-preservingly
// onto {1..k} and checks the result against the direct construction.
SubpairResult extract_subpair(const config::MobiusPair& M, const std::vector<int>& X);

// Point-block structure with named points; blocks are point-name lists.
struct RawStructure {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> blocks;
};

RawStructure to_raw(const config::MobiusPair& M);

// Generic deletion (X need not be invariant); used to probe which deletions
// leave a recognizable pair.
RawStructure delete_indices(const config::MobiusPair& M, const std::vector<int>& X);

struct RecognizeResult {
  int n = 0;
  std::vector<int> cycle_type;
  std::map<std::string, std::string> point_labels;  // input name -> a_i / b_i
  std::vector<std::string> block_labels;            // per input block position
};

// Decides whether S is a relabeled Mobius pair: checks the (2n_n) counts,
// searches for a decomposition into two mutually inscribed simplices, reads
// the permutation off the recovered labeling and verifies the rebuild.
// Absence is signaled by an empty result.
std::optional<RecognizeResult> recognize(const RawStructure& S);

}  // namespace mobius::analysis
