#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ulog/bitvector.hpp"
#include "ulog/error.hpp"

namespace ulog {

/// Largest carrier that may be declared directly, and the largest carrier
/// whose powerset may be materialized.
inline constexpr std::size_t kHardCap = 12;
/// Largest carrier X for which PPX is materialized (|PX| <= kHardCap).
inline constexpr std::size_t kPowersetPowersetCap = 3;
/// Largest carrier whose up-sets are enumerated.
inline constexpr std::size_t kUpsetEnumerationCap = 5;

/// Subset of a carrier of at most kHardCap elements, bit i = element i.
using Mask = std::uint32_t;

inline bool is_submask(Mask a, Mask b) { return (a & ~b) == 0; }

/// Calls fn on every submask of m, from m down to 0.
template <class Fn>
void for_each_submask(Mask m, Fn&& fn) {
  Mask s = m;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

/// A finite carrier with labeled elements. Element i is bit position i.
/// Cheap to copy; the label table is shared and immutable.
class Universe {
 public:
  Universe();
  /// A declared carrier: distinct labels, at most kHardCap of them.
  explicit Universe(std::vector<std::string> labels);

  /// Carrier {a, b, c, ...} of the given size.
  static Universe standard(std::size_t size);

  /// A carrier synthesized from another one (powersets, up-set carriers).
  /// Not subject to kHardCap.
  static Universe derived(std::vector<std::string> labels, const Universe* powerset_of = nullptr);

  std::size_t size() const { return data_->labels.size(); }
  bool empty() const { return size() == 0; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// The carrier X when this universe was built as PX, else nullptr.
  const Universe* powerset_base() const { return data_->powerset_of.get(); }

  /// 2^size(); requires size() <= kHardCap.
  std::size_t subset_count() const;
  Mask full_mask() const;

  /// "{a,b}" with elements in index order.
  std::string format_mask(Mask m) const;
  std::string format_bits(const BitVector& bits) const;

  friend bool operator==(const Universe& a, const Universe& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    std::size_t fingerprint = 0;
    std::shared_ptr<const Universe> powerset_of;
  };
  explicit Universe(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Throws UniverseMismatch unless a == b.
void require_same(const Universe& a, const Universe& b, std::string_view what);
/// Throws CapExceeded unless u.size() <= cap.
void require_size_at_most(const Universe& u, std::size_t cap, std::string_view what);

/// PX as a carrier: element i is the subset with bit pattern i.
Universe powerset_universe(const Universe& x);

class Subset {
 public:
  explicit Subset(Universe universe);
  Subset(Universe universe, BitVector bits);
  static Subset from_mask(Universe universe, Mask m);
  static Subset full(Universe universe);
  static Subset of(Universe universe, std::initializer_list<std::size_t> elements);

  const Universe& universe() const { return universe_; }
  const BitVector& bits() const { return bits_; }
  bool contains(std::size_t element) const { return bits_.test(element); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Bit pattern; requires a carrier of at most kHardCap elements.
  Mask mask() const;

  std::string to_string() const { return universe_.format_bits(bits_); }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

 private:
  Universe universe_;
  BitVector bits_;
};

Subset operator|(const Subset& a, const Subset& b);
Subset operator&(const Subset& a, const Subset& b);
Subset complement(const Subset& a);
bool is_subset_of(const Subset& a, const Subset& b);

/// All subsets in ascending bit-pattern order.
std::vector<Subset> enumerate_subsets(const Universe& x);

/// A function between carriers, stored as one codomain index per element.
class TotalMap {
 public:
  TotalMap(Universe domain, Universe codomain, std::vector<std::size_t> targets);
  static TotalMap identity(const Universe& x);

  const Universe& domain() const { return domain_; }
  const Universe& codomain() const { return codomain_; }
  const std::vector<std::size_t>& targets() const { return targets_; }
  std::size_t operator()(std::size_t x) const { return targets_[x]; }

  bool is_injective() const;
  bool is_surjective() const;

  /// f(A) and f^{-1}(B) on masks; both carriers must be within kHardCap.
  Mask image(Mask a) const;
  Mask preimage(Mask b) const;

  /// "[0,1,1]"
  std::string encode() const;

  friend bool operator==(const TotalMap&, const TotalMap&) = default;

 private:
  Universe domain_;
  Universe codomain_;
  std::vector<std::size_t> targets_;
};

/// g . f
TotalMap compose(const TotalMap& g, const TotalMap& f);

/// Every map X -> Y, codomain index of element 0 varying fastest.
std::vector<TotalMap> enumerate_maps(const Universe& x, const Universe& y);

}  // namespace ulog
