#include "ulog/relation.hpp"

namespace ulog {

Relation::Relation(Universe source, Universe target)
    : source_(std::move(source)), target_(std::move(target)),
      rows_(source_.size(), BitVector(target_.size())) {}

Relation::Relation(Universe source, Universe target, std::vector<BitVector> rows)
    : source_(std::move(source)), target_(std::move(target)), rows_(std::move(rows)) {
  if (rows_.size() != source_.size()) throw UniverseMismatch("relation row count differs from source");
  for (const auto& r : rows_) {
    if (r.size() != target_.size()) throw UniverseMismatch("relation row length differs from target");
  }
}

Relation Relation::identity(const Universe& x) {
  Relation r(x, x);
  for (std::size_t i = 0; i < x.size(); ++i) r.set(i, i);
  return r;
}

Relation Relation::full(const Universe& source, const Universe& target) {
  return Relation(source, target,
                  std::vector<BitVector>(source.size(), BitVector::filled(target.size())));
}

Relation Relation::from_code(const Universe& source, const Universe& target, std::uint64_t code) {
  const std::size_t m = target.size();
  if (source.size() * m > 64) throw CapExceeded("relation code needs more than 64 pairs");
  Relation r(source, target);
  for (std::size_t x = 0; x < source.size(); ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if ((code >> (x * m + y)) & 1U) r.set(x, y);
    }
  }
  return r;
}

Relation Relation::transpose() const {
  Relation t(target_, source_);
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    rows_[x].for_each_set([&](std::size_t y) { t.set(y, x); });
  }
  return t;
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

std::string Relation::encode() const {
  std::string out;
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (x != 0) out += '|';
    out += rows_[x].to_string();
  }
  return out;
}

Relation compose(const Relation& s, const Relation& r) {
  require_same(r.target(), s.source(), "relation composition");
  std::vector<BitVector> rows(r.source().size(), BitVector(s.target().size()));
  for (std::size_t x = 0; x < rows.size(); ++x) {
    r.row(x).for_each_set([&](std::size_t y) { rows[x] |= s.row(y); });
  }
  return Relation(r.source(), s.target(), std::move(rows));
}

Relation graph(const TotalMap& f) {
  Relation r(f.domain(), f.codomain());
  for (std::size_t x = 0; x < f.domain().size(); ++x) r.set(x, f(x));
  return r;
}

Relation converse(const TotalMap& f) { return graph(f).transpose(); }

bool leq(const Relation& r, const Relation& r2) {
  require_same(r.source(), r2.source(), "relation order");
  require_same(r.target(), r2.target(), "relation order");
  for (std::size_t x = 0; x < r.source().size(); ++x) {
    if (!r.row(x).is_subset_of(r2.row(x))) return false;
  }
  return true;
}

bool check_map_adjunction(const TotalMap& f) {
  const Relation fr = graph(f);
  const Relation fc = converse(f);
  return leq(Relation::identity(f.domain()), compose(fc, fr)) &&
         leq(compose(fr, fc), Relation::identity(f.codomain()));
}

std::vector<Relation> enumerate_relations(const Universe& source, const Universe& target) {
  const std::size_t pairs = source.size() * target.size();
  if (pairs > 20) throw CapExceeded("too many relations to enumerate");
  std::vector<Relation> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    out.push_back(Relation::from_code(source, target, code));
  }
  return out;
}

}  // namespace ulog
