#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace mobius {

// Dynamic bitset sized at construction. Covers the handful of operations the
// incidence tables and the backtracking search need; universes stay small
// (4n bits), so rows are usually a single word.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int universe() const { return nbits_; }

  void set(int i) { w_[i >> 6] |= u64{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(u64{1} << (i & 63)); }
  void flip(int i) { w_[i >> 6] ^= u64{1} << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (u64 x : w_) c += std::popcount(x);
    return c;
  }

  bool any() const {
    for (u64 x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Lowest set bit, -1 when empty.
  int first() const {
    for (std::size_t j = 0; j < w_.size(); ++j)
      if (w_[j]) return static_cast<int>(j * 64 + std::countr_zero(w_[j]));
    return -1;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t j = 0; j < w_.size(); ++j) w_[j] &= o.w_[j];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t j = 0; j < w_.size(); ++j) w_[j] |= o.w_[j];
    return *this;
  }
  // *this &= ~o
  Bits& and_not(const Bits& o) {
    for (std::size_t j = 0; j < w_.size(); ++j) w_[j] &= ~o.w_[j];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  static int and_count(const Bits& a, const Bits& b) {
    int c = 0;
    for (std::size_t j = 0; j < a.w_.size(); ++j)
      c += std::popcount(a.w_[j] & b.w_[j]);
    return c;
  }

  static bool and_any(const Bits& a, const Bits& b) {
    for (std::size_t j = 0; j < a.w_.size(); ++j)
      if (a.w_[j] & b.w_[j]) return true;
    return false;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t j = 0; j < w_.size(); ++j) {
      u64 x = w_[j];
      while (x) {
        fn(static_cast<int>(j * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_list() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  auto operator<=>(const Bits&) const = default;

 private:
  using u64 = std::uint64_t;
  int nbits_ = 0;
  std::vector<u64> w_;
};

}  // namespace mobius
