#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mcp {

/// Fixed-width bit vector over [0, size). Unused tail bits of the last
/// word are kept zero so that word-wise operations stay exact.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bitset of(std::size_t n, std::initializer_list<int> bits) {
    Bitset b(n);
    for (int i : bits) b.set(static_cast<std::size_t>(i));
    return b;
  }

  static Bitset full(std::size_t n) {
    Bitset b(n);
    std::fill(b.w_.begin(), b.w_.end(), ~std::uint64_t{0});
    b.mask_tail();
    return b;
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool any() const { return !none(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  /// *this &= ~o
  Bitset& subtract(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  /// popcount(*this & o) without allocating.
  std::size_t count_and(const Bitset& o) const {
    assert(n_ == o.n_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  /// Index of the first set bit, or -1.
  int find_first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  /// Index of the first set bit strictly after `prev`, or -1.
  int find_next(int prev) const {
    std::size_t i = static_cast<std::size_t>(prev + 1);
    if (i >= n_) return -1;
    std::size_t wi = i >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi == w_.size()) return -1;
      w = w_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  /// Index of the k-th set bit (k counts from 0). Requires k < count().
  int select(std::size_t k) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      auto pc = static_cast<std::size_t>(std::popcount(w));
      if (k < pc) {
        while (k--) w &= w - 1;
        return static_cast<int>(i * 64 + std::countr_zero(w));
      }
      k -= pc;
    }
    assert(false && "select out of range");
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  std::uint64_t word(std::size_t i) const { return w_[i]; }
  void set_word(std::size_t i, std::uint64_t w) {
    w_[i] = w;
    if (i + 1 == w_.size()) mask_tail();
  }
  std::size_t word_count() const { return w_.size(); }

  bool operator==(const Bitset&) const = default;

 private:
  void mask_tail() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace mcp
