#include "ulog/family.hpp"

#include <algorithm>

namespace ulog {
namespace {

std::size_t family_length(const Universe& u) {
  require_size_at_most(u, kFamilyCap, "family");
  return std::size_t{1} << u.size();
}

}  // namespace

Family::Family(Universe universe)
    : universe_(std::move(universe)), bits_(family_length(universe_)) {}

Family::Family(Universe universe, BitVector bits)
    : universe_(std::move(universe)), bits_(std::move(bits)) {
  if (bits_.size() != family_length(universe_)) {
    throw UniverseMismatch("family length differs from 2^|carrier|");
  }
}

bool Family::contains(const Subset& s) const {
  require_same(universe_, s.universe(), "family membership");
  return contains(s.mask());
}

bool Family::is_up_closed() const {
  const std::size_t n = universe_.size();
  bool closed = true;
  bits_.for_each_set([&](std::size_t s) {
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!bits_.test(s | (std::size_t{1} << i))) closed = false;
    }
  });
  return closed;
}

std::vector<Mask> Family::members() const {
  std::vector<Mask> out;
  bits_.for_each_set([&](std::size_t s) { out.push_back(static_cast<Mask>(s)); });
  return out;
}

std::string Family::to_string() const {
  std::string out = "{";
  bool first = true;
  bits_.for_each_set([&](std::size_t s) {
    if (!first) out += ',';
    out += universe_.format_mask(static_cast<Mask>(s));
    first = false;
  });
  return out + "}";
}

UpSet::UpSet(Family family) : family_(std::move(family)) {
  if (!family_.is_up_closed()) throw AxiomViolation("family is not up-closed: " + family_.to_string());
}

UpSet UpSet::principal(const Universe& universe, Mask generator) {
  Family f(universe);
  const std::size_t n = std::size_t{1} << universe.size();
  for (std::size_t s = 0; s < n; ++s) {
    if (is_submask(generator, static_cast<Mask>(s))) f.insert(static_cast<Mask>(s));
  }
  return UpSet(std::move(f), Trusted{});
}

bool UpSet::is_subset_of(const UpSet& other) const {
  require_same(universe(), other.universe(), "up-set inclusion");
  return bits().is_subset_of(other.bits());
}

UpSet up_closure(const Family& f) {
  // Superset zeta transform: one sweep per element adds S+{i} for each member S.
  BitVector bits = f.bits();
  const std::size_t n = f.universe().size();
  const std::size_t len = bits.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < len; ++s) {
      if ((s & bit) == 0 && bits.test(s)) bits.set(s | bit);
    }
  }
  return UpSet(Family(f.universe(), std::move(bits)), UpSet::Trusted{});
}

std::vector<UpSet> enumerate_upsets(const Universe& x) {
  require_size_at_most(x, kUpsetEnumerationCap, "up-set enumeration");
  // An up-set over {0..k} splits into the members without element k (low half)
  // and the members with k removed (high half); the low half is contained in
  // the high half, and any such pair of up-sets over {0..k-1} recombines.
  std::vector<std::uint64_t> level = {0b0, 0b1};
  for (std::size_t k = 1; k <= x.size(); ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<std::uint64_t> next;
    for (auto hi : level) {
      for (auto lo : level) {
        if ((lo & ~hi) == 0) next.push_back(lo | (hi << half));
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<UpSet> out;
  out.reserve(level.size());
  const std::size_t len = std::size_t{1} << x.size();
  for (auto word : level) out.emplace_back(Family(x, BitVector::from_word(len, word)));
  return out;
}

std::size_t upset_index(const std::vector<UpSet>& enumeration, const UpSet& u) {
  auto it = std::lower_bound(enumeration.begin(), enumeration.end(), u,
                             [](const UpSet& a, const UpSet& b) { return a.bits() < b.bits(); });
  if (it == enumeration.end() || !(*it == u)) throw UnknownElement("up-set not in enumeration");
  return static_cast<std::size_t>(it - enumeration.begin());
}

}  // namespace ulog
