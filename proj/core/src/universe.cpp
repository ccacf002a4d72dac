#include "ulog/universe.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ulog {
namespace {

std::size_t fingerprint_of(const std::vector<std::string>& labels) {
  std::size_t h = labels.size();
  for (const auto& l : labels) h = h * 1000003U ^ std::hash<std::string>{}(l);
  return h;
}

}  // namespace

Universe::Universe() : Universe(std::vector<std::string>{}) {}

Universe::Universe(std::vector<std::string> labels) {
  if (labels.size() > kHardCap) {
    throw CapExceeded("carrier has " + std::to_string(labels.size()) + " elements, limit is " +
                      std::to_string(kHardCap));
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error("duplicate element label '" + l + "'");
  }
  auto data = std::make_shared<Data>();
  data->fingerprint = fingerprint_of(labels);
  data->labels = std::move(labels);
  data_ = std::move(data);
}

Universe Universe::standard(std::size_t size) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Universe(std::move(labels));
}

Universe Universe::derived(std::vector<std::string> labels, const Universe* powerset_of) {
  auto data = std::make_shared<Data>();
  data->fingerprint = fingerprint_of(labels);
  data->labels = std::move(labels);
  if (powerset_of != nullptr) data->powerset_of = std::make_shared<const Universe>(*powerset_of);
  return Universe(std::shared_ptr<const Data>(std::move(data)));
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
  const auto& ls = data_->labels;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t Universe::subset_count() const {
  require_size_at_most(*this, kHardCap, "subset enumeration");
  return std::size_t{1} << size();
}

Mask Universe::full_mask() const {
  require_size_at_most(*this, kHardCap, "subset mask");
  return static_cast<Mask>((std::size_t{1} << size()) - 1);
}

std::string Universe::format_mask(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if ((m >> i) & 1U) {
      if (!first) out += ',';
      out += label(i);
      first = false;
    }
  }
  out += '}';
  return out;
}

std::string Universe::format_bits(const BitVector& bits) const {
  std::string out = "{";
  bool first = true;
  bits.for_each_set([&](std::size_t i) {
    if (!first) out += ',';
    out += label(i);
    first = false;
  });
  out += '}';
  return out;
}

bool operator==(const Universe& a, const Universe& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->fingerprint == b.data_->fingerprint && a.data_->labels == b.data_->labels;
}

void require_same(const Universe& a, const Universe& b, std::string_view what) {
  if (!(a == b)) {
    throw UniverseMismatch(std::string(what) + ": carriers differ (" + std::to_string(a.size()) +
                           " vs " + std::to_string(b.size()) + " elements)");
  }
}

void require_size_at_most(const Universe& u, std::size_t cap, std::string_view what) {
  if (u.size() > cap) {
    throw CapExceeded(std::string(what) + ": carrier of size " + std::to_string(u.size()) +
                      " exceeds limit " + std::to_string(cap));
  }
}

Universe powerset_universe(const Universe& x) {
  require_size_at_most(x, kHardCap, "powerset");
  const std::size_t n = std::size_t{1} << x.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t m = 0; m < n; ++m) labels.push_back(x.format_mask(static_cast<Mask>(m)));
  return Universe::derived(std::move(labels), &x);
}

// ---------------------------------------------------------------------------

Subset::Subset(Universe universe) : universe_(std::move(universe)), bits_(universe_.size()) {}

Subset::Subset(Universe universe, BitVector bits)
    : universe_(std::move(universe)), bits_(std::move(bits)) {
  if (bits_.size() != universe_.size()) throw UniverseMismatch("subset length differs from carrier");
}

Subset Subset::from_mask(Universe universe, Mask m) {
  require_size_at_most(universe, kHardCap, "subset mask");
  if ((m >> universe.size()) != 0) throw UnknownElement("mask has bits beyond the carrier");
  const auto n = universe.size();
  return Subset(std::move(universe), BitVector::from_word(n, m));
}

Subset Subset::full(Universe universe) {
  const auto n = universe.size();
  return Subset(std::move(universe), BitVector::filled(n));
}

Subset Subset::of(Universe universe, std::initializer_list<std::size_t> elements) {
  BitVector bits(universe.size());
  for (auto e : elements) {
    if (e >= universe.size()) throw UnknownElement("element index out of range");
    bits.set(e);
  }
  return Subset(std::move(universe), std::move(bits));
}

Mask Subset::mask() const {
  require_size_at_most(universe_, kHardCap, "subset mask");
  return static_cast<Mask>(bits_.to_word());
}

Subset operator|(const Subset& a, const Subset& b) {
  require_same(a.universe(), b.universe(), "union");
  return Subset(a.universe(), a.bits() | b.bits());
}

Subset operator&(const Subset& a, const Subset& b) {
  require_same(a.universe(), b.universe(), "intersection");
  return Subset(a.universe(), a.bits() & b.bits());
}

Subset complement(const Subset& a) {
  BitVector bits = a.bits();
  bits.flip_all();
  return Subset(a.universe(), std::move(bits));
}

bool is_subset_of(const Subset& a, const Subset& b) {
  require_same(a.universe(), b.universe(), "inclusion");
  return a.bits().is_subset_of(b.bits());
}

std::vector<Subset> enumerate_subsets(const Universe& x) {
  const std::size_t n = x.subset_count();
  std::vector<Subset> out;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) out.push_back(Subset::from_mask(x, static_cast<Mask>(m)));
  return out;
}

// ---------------------------------------------------------------------------

TotalMap::TotalMap(Universe domain, Universe codomain, std::vector<std::size_t> targets)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), targets_(std::move(targets)) {
  if (targets_.size() != domain_.size()) {
    throw Error("map assigns " + std::to_string(targets_.size()) + " targets on a domain of " +
                std::to_string(domain_.size()) + " elements");
  }
  for (auto t : targets_) {
    if (t >= codomain_.size()) throw UnknownElement("map target outside the codomain");
  }
}

TotalMap TotalMap::identity(const Universe& x) {
  std::vector<std::size_t> t(x.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return TotalMap(x, x, std::move(t));
}

bool TotalMap::is_injective() const {
  std::vector<bool> hit(codomain_.size(), false);
  for (auto t : targets_) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

bool TotalMap::is_surjective() const {
  std::vector<bool> hit(codomain_.size(), false);
  for (auto t : targets_) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Mask TotalMap::image(Mask a) const {
  Mask out = 0;
  for (std::size_t x = 0; x < targets_.size(); ++x) {
    if ((a >> x) & 1U) out |= Mask{1} << targets_[x];
  }
  return out;
}

Mask TotalMap::preimage(Mask b) const {
  Mask out = 0;
  for (std::size_t x = 0; x < targets_.size(); ++x) {
    if ((b >> targets_[x]) & 1U) out |= Mask{1} << x;
  }
  return out;
}

std::string TotalMap::encode() const {
  std::string out = "[";
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(targets_[i]);
  }
  return out + "]";
}

TotalMap compose(const TotalMap& g, const TotalMap& f) {
  require_same(f.codomain(), g.domain(), "map composition");
  std::vector<std::size_t> t(f.domain().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return TotalMap(f.domain(), g.codomain(), std::move(t));
}

std::vector<TotalMap> enumerate_maps(const Universe& x, const Universe& y) {
  std::vector<TotalMap> out;
  if (x.size() > 0 && y.size() == 0) return out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total *= y.size();
    if (total > (std::size_t{1} << 20)) throw CapExceeded("too many maps to enumerate");
  }
  std::vector<std::size_t> t(x.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t code = k;
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = code % y.size();
      code /= y.size();
    }
    out.emplace_back(x, y, t);
  }
  return out;
}

}  // namespace ulog
