#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "nsg/types.hpp"

namespace nsg {

// Dense membership table over {0, 1, ..., size()-1}; a set bit means the
// index is an element of the semigroup. Bits past size() in the last word
// are kept zero so equality, hashing and lexicographic compare can work
// word-by-word.
class GapTable {
public:
  GapTable() = default;
  explicit GapTable(Int nbits, bool fill = false)
      : nbits_(nbits),
        words_(word_count(nbits), fill ? ~std::uint64_t{0} : 0) {
    mask_tail();
  }

  Int size() const { return nbits_; }

  bool test(Int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(Int i) {
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(Int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  // Number of set bits.
  Int count() const {
    Int n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  // Largest index with an unset bit, or -1 if every bit is set.
  Int last_zero() const {
    for (std::size_t wi = words_.size(); wi-- > 0;) {
      std::uint64_t inv = ~words_[wi];
      if (wi + 1 == words_.size()) {
        unsigned used = static_cast<unsigned>(nbits_ - static_cast<Int>(wi) * 64);
        if (used < 64) inv &= (std::uint64_t{1} << used) - 1;
      }
      if (inv) return static_cast<Int>(wi) * 64 + (63 - std::countl_zero(inv));
    }
    return -1;
  }

  // Smallest set index >= from, or -1 if none.
  Int next_set(Int from) const {
    if (from >= nbits_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<Int>(wi) * 64 + std::countr_zero(w);
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  // Copy of the first nbits bits.
  GapTable prefix(Int nbits) const {
    GapTable t(nbits);
    std::size_t nw = t.words_.size();
    for (std::size_t i = 0; i < nw; ++i) t.words_[i] = words_[i];
    t.mask_tail();
    return t;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const GapTable&) const = default;

  // Bitwise lexicographic order, index 0 most significant, 0 < 1; ties
  // broken by size (shorter first). Tables compared in practice share a
  // size, since the sort key leads with the Frobenius number.
  bool lex_less(const GapTable& o) const {
    std::size_t nw = words_.size() < o.words_.size() ? words_.size()
                                                     : o.words_.size();
    for (std::size_t i = 0; i < nw; ++i) {
      std::uint64_t d = words_[i] ^ o.words_[i];
      if (d) {
        int b = std::countr_zero(d);
        return ((words_[i] >> b) & 1u) == 0;
      }
    }
    return nbits_ < o.nbits_;
  }

  std::size_t hash() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= v & 0xff;
        h *= 1099511628211ull;
        v >>= 8;
      }
    };
    mix(static_cast<std::uint64_t>(nbits_));
    for (std::uint64_t w : words_) mix(w);
    return static_cast<std::size_t>(h);
  }

private:
  static std::size_t word_count(Int n) {
    return (static_cast<std::size_t>(n) + 63) / 64;
  }
  void mask_tail() {
    if (words_.empty()) return;
    unsigned used = static_cast<unsigned>(nbits_ & 63);
    if (used) words_.back() &= (std::uint64_t{1} << used) - 1;
  }

  Int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct GapTableHash {
  std::size_t operator()(const GapTable& t) const { return t.hash(); }
};

// First x in [lo, hi] with t.test(x) && !t.test(x + shift); -1 if none.
// Requires hi + shift < t.size(). Word-parallel: scans 64 positions at a
// time, so the common "no violation" case costs O(size/64).
Int first_shift_violation(const GapTable& t, Int shift, Int lo, Int hi);

} // namespace nsg
