#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ulog {

/// Fixed-length bit vector. Bits past size() are always zero, so word-wise
/// comparison and hashing are exact.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector from_word(std::size_t size, std::uint64_t word);
  static BitVector filled(std::size_t size);

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void set(std::size_t i, bool value) {
    if (value) {
      set(i);
    } else {
      reset(i);
    }
  }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;

  /// Value of the low 64 bits; only meaningful when size() <= 64.
  std::uint64_t to_word() const { return words_.empty() ? 0 : words_[0]; }

  const std::vector<std::uint64_t>& words() const { return words_; }

  BitVector& operator|=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator^=(const BitVector& other);
  void flip_all();

  bool is_subset_of(const BitVector& other) const;

  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        fn(w * 64 + bit);
        word &= word - 1;
      }
    }
  }

  /// Bits as a string, index 0 first.
  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Orders vectors of equal length as binary numbers (highest index most
  /// significant); shorter vectors sort first.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  void clear_tail();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
inline BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

}  // namespace ulog
