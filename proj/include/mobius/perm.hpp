#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mobius/error.hpp"

namespace mobius::perm {

using BigInt = boost::multiprecision::cpp_int;

// Bijection of I = {1..n}. Indices are 1-based throughout the library.
class Permutation {
 public:
  explicit Permutation(int n);  // identity on {1..n}
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  // (a * b)(i) = a(b(i)); b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;

 private:
  Permutation() = default;
  std::vector<int> images_;  // images_[i-1] = image of i
};

// Cycle layout: lengths nu_1 < ... < nu_r with multiplicities m_t.
// offsets[t][k] is mu_k^t = sum_{i<t} m_i*nu_i + (k-1)*nu_t + 1, the starting
// label of the k-th cycle of length nu_t in the canonical relabeling.
// domains[t][k] holds the actual cycle of the permutation in orbit order,
// anchored at its smallest element; cycles of equal length are ordered by
// anchor. For canonical representatives domains[t][k] is exactly
// {mu_k^t, ..., mu_k^t + nu_t - 1}.
struct CycleDecomposition {
  int n = 0;
  std::vector<int> lengths;
  std::vector<int> multiplicities;
  std::vector<std::vector<int>> offsets;
  std::vector<std::vector<std::vector<int>>> domains;

  int classes() const { return static_cast<int>(lengths.size()); }
  std::vector<int> cycle_type() const;  // lengths with multiplicity, ascending
};

// Accepts one-line image form ("2 1 3") or cycle form ("(1 2)(3)"); fixed
// points may be omitted in cycle form. Throws parse_error naming the
// offending token.
Permutation parse_permutation(const std::string& text, int n);

// Canonical text form: cycle notation with explicit fixed points, cycles
// shortest first, ties by smallest element, e.g. "(1)(2 3 4)".
std::string to_cycle_string(const Permutation& p);

CycleDecomposition cycle_decomposition(const Permutation& p);

// The permutation whose k-th cycle of length nu_t is
// mu_k^t -> mu_k^t+1 -> ... -> mu_k^t+(nu_t-1) -> mu_k^t.
Permutation canonical_rep(std::vector<int> cycle_lengths);

// a o p o a^{-1} (p acts first).
Permutation conjugate(const Permutation& p, const Permutation& a);

// Some alpha with alpha o p o alpha^{-1} == q, or nothing when the cycle
// types differ.
std::optional<Permutation> are_conjugate(const Permutation& p, const Permutation& q);

// prod_t nu_t^{m_t} * m_t!
std::uint64_t centralizer_order(const Permutation& p);

// All X with |X| = size and p(X) = X, as sorted element lists in
// lexicographic order. Computed as unions of whole cycle domains.
std::vector<std::vector<int>> invariant_subsets(const Permutation& p, int size);

struct PartitionCount {
  int n = 0;
  BigInt value;
};

// Exact p(n) via the pentagonal-number recurrence.
PartitionCount partition_count(int n);

// Partitions of n as ascending part lists, in lexicographic order.
std::vector<std::vector<int>> partitions_of(int n);

// One canonical representative per conjugacy class of S_n; exactly p(n) of
// them, ordered by partitions_of(n).
std::vector<Permutation> conjugacy_class_reps(int n);

}  // namespace mobius::perm
