#include "laws/law_support.hpp"

namespace ulog {

Mask CaseSampler::subset(const Universe& x) { return static_cast<Mask>(below(x.subset_count())); }

TotalMap CaseSampler::map(const Universe& x, const Universe& y) {
  std::vector<std::size_t> t(x.size());
  for (auto& v : t) v = below(y.size());
  return TotalMap(x, y, std::move(t));
}

Relation CaseSampler::relation(const Universe& s, const Universe& t) {
  Relation r(s, t);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (coin(2)) r.set(i, j);
    }
  }
  return r;
}

UpSet CaseSampler::upset(const Universe& x) {
  Family generators(x);
  const std::size_t k = below(x.size() + 2);
  for (std::size_t i = 0; i < k; ++i) generators.insert(subset(x));
  return up_closure(generators);
}

MonotoneRelation CaseSampler::monotone(const Universe& x, const Universe& y) {
  std::vector<UpSet> mates;
  for (std::size_t j = 0; j < y.size(); ++j) mates.push_back(upset(x));
  return MonotoneRelation(x, y, std::move(mates));
}

KleisliMorphism CaseSampler::kleisli(const Universe& y, const Universe& x) {
  std::vector<UpSet> values;
  for (std::size_t j = 0; j < y.size(); ++j) values.push_back(upset(x));
  return KleisliMorphism(y, x, std::move(values));
}

AbstractLogic CaseSampler::logic(const Universe& x) {
  const std::size_t density = 1 + below(2 * x.size() + 2);
  std::vector<Rule> rules;
  for (std::size_t a = 0; a < x.subset_count(); ++a) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (((a >> i) & 1U) == 0 && coin(density * x.size() + 1)) rules.push_back({static_cast<Mask>(a), i});
    }
  }
  return generate(x, rules);
}

UCoalgebra CaseSampler::coalgebra(const Universe& x) { return UCoalgebra(kleisli(x, x)); }

}  // namespace ulog
