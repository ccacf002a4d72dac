#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ulog/bitvector.hpp"
#include "ulog/universe.hpp"

namespace ulog {

/// Largest carrier over which a family (a subset of PX) is materialized.
/// Above kHardCap only for families over derived carriers such as the
/// enumerated UX of a three-element X.
inline constexpr std::size_t kFamilyCap = 20;

/// A set of subsets of a carrier: bit S is set iff the subset with pattern S
/// is a member.
class Family {
 public:
  explicit Family(Universe universe);
  Family(Universe universe, BitVector bits);
  template <class Range>
  static Family of_masks(Universe universe, const Range& members) {
    Family f(std::move(universe));
    for (Mask m : members) f.insert(m);
    return f;
  }

  const Universe& universe() const { return universe_; }
  const BitVector& bits() const { return bits_; }

  bool contains(Mask s) const { return bits_.test(s); }
  bool contains(const Subset& s) const;
  void insert(Mask s) { bits_.set(s); }

  bool is_up_closed() const;
  std::vector<Mask> members() const;

  /// "{{a},{a,b}}" with members in canonical order.
  std::string to_string() const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

 private:
  Universe universe_;
  BitVector bits_;
};

/// An up-closed family: S a member and S within T imply T a member.
class UpSet {
 public:
  /// The empty family.
  explicit UpSet(Universe universe) : family_(std::move(universe)) {}
  /// Throws AxiomViolation when the family is not up-closed.
  explicit UpSet(Family family);

  /// All supersets of the generator.
  static UpSet principal(const Universe& universe, Mask generator);
  /// Every subset of the carrier.
  static UpSet top(const Universe& universe) { return principal(universe, 0); }

  const Universe& universe() const { return family_.universe(); }
  const Family& family() const { return family_; }
  const BitVector& bits() const { return family_.bits(); }
  bool contains(Mask s) const { return family_.contains(s); }
  bool contains(const Subset& s) const { return family_.contains(s); }
  std::vector<Mask> members() const { return family_.members(); }
  std::string to_string() const { return family_.to_string(); }

  bool is_subset_of(const UpSet& other) const;

  friend bool operator==(const UpSet& a, const UpSet& b) { return a.family_ == b.family_; }

 private:
  struct Trusted {};
  UpSet(Family family, Trusted) : family_(std::move(family)) {}
  friend UpSet up_closure(const Family& f);

  Family family_;
};

/// Least up-closed family containing f.
UpSet up_closure(const Family& f);

/// Every up-set over x, ascending as bit patterns. Requires x.size() <= kUpsetEnumerationCap.
std::vector<UpSet> enumerate_upsets(const Universe& x);

/// Position of u within enumerate_upsets(u.universe()).
std::size_t upset_index(const std::vector<UpSet>& enumeration, const UpSet& u);

}  // namespace ulog
