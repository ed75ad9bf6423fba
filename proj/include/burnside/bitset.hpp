#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace burnside {

// Set of group element indices, packed into 64-bit words (bit i = element i).
// Ordering compares the set as one big unsigned integer; together with the
// popcount this yields the canonical (order, bitset-value) subgroup sort.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static Bitset single(int nbits, int i) {
    Bitset b(nbits);
    b.set(i);
    return b;
  }

  int universe_size() const { return nbits_; }

  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= word_bit(i); }
  void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~word_bit(i); }
  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] & word_bit(i)) != 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }

  bool subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset operator&(const Bitset& other) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  Bitset operator|(const Bitset& other) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] | other.words_[i];
    return r;
  }

  // Index of the lowest set bit, or -1 when empty.
  int lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const Bitset& other) const {
    return nbits_ == other.nbits_ && words_ == other.words_;
  }

  // Numeric-value order: most significant word decides.
  std::strong_ordering operator<=>(const Bitset& other) const {
    if (nbits_ != other.nbits_) return nbits_ <=> other.nbits_;
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != other.words_[i]) return words_[i] <=> other.words_[i];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(nbits_);
    for (auto w : words_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
    return h;
  }

 private:
  static std::uint64_t word_bit(int i) { return std::uint64_t{1} << (i & 63); }

  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace burnside
