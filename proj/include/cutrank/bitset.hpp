// cutrank: exact cutting-plane rank laboratory.
//
// Small dynamic bitset over packed 64-bit words. Used for GF(2) rows in the
// parity solver and for tight-row incidence sets in the double-description
// conversion. Only the operations those two kernels need.

#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace cutrank {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  // Grows to nbits (new bits zero); keeps existing content.
  void resize(std::size_t nbits) {
    nbits_ = nbits;
    words_.resize((nbits + 63) / 64, 0);
  }

  void operator^=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }
  void operator&=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  }
  void operator|=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }

  bool any() const {
    for (const auto w : words_)
      if (w != 0) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (const auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  // True iff every set bit of *this is also set in o.
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }

  // Index of the lowest set bit, or size() when empty.
  std::size_t first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
      }
    }
    return nbits_;
  }

  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }

  static Bitset intersection(const Bitset& a, const Bitset& b) {
    Bitset r = a;
    r &= b;
    return r;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cutrank
