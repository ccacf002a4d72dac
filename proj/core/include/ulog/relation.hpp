#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ulog/bitvector.hpp"
#include "ulog/universe.hpp"

namespace ulog {

/// A relation r: X -|-> Y as a dense boolean matrix; row x holds the targets
/// related to x.
class Relation {
 public:
  Relation(Universe source, Universe target);
  Relation(Universe source, Universe target, std::vector<BitVector> rows);

  static Relation identity(const Universe& x);
  static Relation full(const Universe& source, const Universe& target);
  /// Bit x * |target| + y of code is the pair (x, y); requires at most 64 pairs.
  static Relation from_code(const Universe& source, const Universe& target, std::uint64_t code);

  const Universe& source() const { return source_; }
  const Universe& target() const { return target_; }

  bool relates(std::size_t x, std::size_t y) const { return rows_[x].test(y); }
  void set(std::size_t x, std::size_t y, bool value = true) { rows_[x].set(y, value); }
  const BitVector& row(std::size_t x) const { return rows_[x]; }
  const std::vector<BitVector>& rows() const { return rows_; }

  Relation transpose() const;
  std::size_t pair_count() const;

  /// Row bit strings separated by '|'.
  std::string encode() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.rows_ == b.rows_;
  }

 private:
  Universe source_;
  Universe target_;
  std::vector<BitVector> rows_;
};

/// s . r : x (s.r) z iff some y has x r y and y s z.
Relation compose(const Relation& s, const Relation& r);

/// x relates to f(x) only.
Relation graph(const TotalMap& f);
/// The inverse image relation: f(x) relates to x.
Relation converse(const TotalMap& f);

/// r is contained in r2.
bool leq(const Relation& r, const Relation& r2);

/// 1_X <= f°.f and f.f° <= 1_Y.
bool check_map_adjunction(const TotalMap& f);

/// Every relation source -|-> target in from_code order; at most 20 pairs.
std::vector<Relation> enumerate_relations(const Universe& source, const Universe& target);

}  // namespace ulog
