#include "ulog/bitvector.hpp"

#include <cassert>

namespace ulog {

BitVector BitVector::from_word(std::size_t size, std::uint64_t word) {
  BitVector v(size);
  if (!v.words_.empty()) {
    v.words_[0] = word;
    v.clear_tail();
  }
  return v;
}

BitVector BitVector::filled(std::size_t size) {
  BitVector v(size);
  for (auto& w : v.words_) w = ~std::uint64_t{0};
  v.clear_tail();
  return v;
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

void BitVector::flip_all() {
  for (auto& w : words_) w = ~w;
  clear_tail();
}

bool BitVector::is_subset_of(const BitVector& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for_each_set([&](std::size_t i) { out[i] = '1'; });
  return out;
}

std::size_t BitVector::hash() const {
  // FNV-1a over the words and the length.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(size_);
  for (auto w : words_) mix(w);
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

void BitVector::clear_tail() {
  const std::size_t rem = size_ & 63;
  if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

}  // namespace ulog
