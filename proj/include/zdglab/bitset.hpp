#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zdg {

/// Fixed-size dynamic bitset used for vertex sets, adjacency rows and ideal
/// membership. Size is set at construction; binary operators require equal
/// sizes.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t find_first() const { return find_from(0); }
  std::size_t find_next(std::size_t i) const { return find_from(i + 1); }

  /// True when this and other share at least one set bit.
  bool intersects(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  Bitset operator~() const {
    Bitset r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset& a, const Bitset& b) = default;
  /// Orders by the sorted member lists, lexicographically.
  friend bool lex_less(const Bitset& a, const Bitset& b) {
    std::size_t i = a.find_first(), j = b.find_first();
    while (i != npos && j != npos) {
      if (i != j) return i < j;
      i = a.find_next(i);
      j = b.find_next(j);
    }
    return i == npos && j != npos;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (auto i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t find_from(std::size_t i) const {
    if (i >= size_) return npos;
    std::size_t k = i >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++k >= words_.size()) return npos;
      w = words_[k];
    }
  }
  void trim() {
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace zdg
