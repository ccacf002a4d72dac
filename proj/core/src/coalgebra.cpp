#include "ulog/coalgebra.hpp"

#include <algorithm>

#include "ulog/closure.hpp"

namespace ulog {

KleisliMorphism::KleisliMorphism(Universe domain, Universe codomain, std::vector<UpSet> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  require_size_at_most(codomain_, kHardCap, "Kleisli morphism");
  if (values_.size() != domain_.size()) throw UniverseMismatch("one up-set per domain element required");
  for (const auto& v : values_) require_same(v.universe(), codomain_, "Kleisli morphism value");
}

std::string KleisliMorphism::encode() const {
  std::string out;
  for (std::size_t y = 0; y < values_.size(); ++y) {
    if (y != 0) out += '|';
    out += values_[y].bits().to_string();
  }
  return out;
}

bool leq(const KleisliMorphism& rho, const KleisliMorphism& rho2) {
  require_same(rho.domain(), rho2.domain(), "Kleisli order");
  require_same(rho.codomain(), rho2.codomain(), "Kleisli order");
  for (std::size_t y = 0; y < rho.domain().size(); ++y) {
    if (!rho(y).is_subset_of(rho2(y))) return false;
  }
  return true;
}

KleisliMorphism eta(const Universe& x) {
  std::vector<UpSet> v;
  for (std::size_t i = 0; i < x.size(); ++i) v.push_back(UpSet::principal(x, Mask{1} << i));
  return KleisliMorphism(x, x, std::move(v));
}

Universe upset_universe(const Universe& x) {
  std::vector<std::string> labels;
  for (const auto& u : enumerate_upsets(x)) labels.push_back(u.to_string());
  return Universe::derived(std::move(labels));
}

namespace {

BitVector sharp_bits(const std::vector<UpSet>& ups, Mask a) {
  BitVector bits(ups.size());
  for (std::size_t i = 0; i < ups.size(); ++i) {
    if (ups[i].contains(a)) bits.set(i);
  }
  return bits;
}

UpSet collect(const Universe& x, const std::function<bool(Mask)>& member) {
  Family f(x);
  for (std::size_t a = 0; a < x.subset_count(); ++a) {
    if (member(static_cast<Mask>(a))) f.insert(static_cast<Mask>(a));
  }
  return UpSet(std::move(f));
}

}  // namespace

Subset sharp(const Subset& a) {
  const auto ups = enumerate_upsets(a.universe());
  return Subset(upset_universe(a.universe()), sharp_bits(ups, a.mask()));
}

UpSet mu_apply(const UpSetFamilyMembership& family, const Universe& x) {
  const auto ups = enumerate_upsets(x);
  return collect(x, [&](Mask a) { return family(sharp_bits(ups, a)); });
}

UpSet mu_apply(const Family& family, const Universe& x) {
  require_size_at_most(x, kPowersetPowersetCap, "materialized multiplication");
  require_same(family.universe(), upset_universe(x), "multiplication argument");
  if (!family.is_up_closed()) throw AxiomViolation("argument of multiplication is not up-closed");
  return mu_apply([&](const BitVector& b) { return family.bits().test(b.to_word()); }, x);
}

KleisliMorphism kleisli_star(const KleisliMorphism& rho, const KleisliMorphism& sigma) {
  require_same(sigma.codomain(), rho.domain(), "Kleisli composition");
  const Universe& x = rho.codomain();
  const std::size_t subsets = x.subset_count();
  // pulled[A] = {y | A in rho(y)}
  std::vector<Mask> pulled(subsets, 0);
  for (std::size_t a = 0; a < subsets; ++a) {
    for (std::size_t y = 0; y < rho.domain().size(); ++y) {
      if (rho(y).contains(static_cast<Mask>(a))) pulled[a] |= Mask{1} << y;
    }
  }
  std::vector<UpSet> out;
  out.reserve(sigma.domain().size());
  for (std::size_t z = 0; z < sigma.domain().size(); ++z) {
    Family f(x);
    for (std::size_t a = 0; a < subsets; ++a) {
      if (sigma(z).contains(pulled[a])) f.insert(static_cast<Mask>(a));
    }
    out.emplace_back(std::move(f));
  }
  return KleisliMorphism(sigma.domain(), x, std::move(out));
}

KleisliMorphism kleisli_star_definitional(const KleisliMorphism& rho, const KleisliMorphism& sigma) {
  require_same(sigma.codomain(), rho.domain(), "Kleisli composition");
  const Universe& x = rho.codomain();
  require_size_at_most(x, kPowersetPowersetCap, "definitional Kleisli composition");
  const TotalMap rho_map = as_total_map(rho);
  std::vector<UpSet> out;
  for (std::size_t z = 0; z < sigma.domain().size(); ++z) {
    out.push_back(mu_apply(ufunctor_membership(rho_map, sigma(z)), x));
  }
  return KleisliMorphism(sigma.domain(), x, std::move(out));
}

UpSet ufunctor_map(const TotalMap& f, const UpSet& a) {
  require_same(a.universe(), f.domain(), "Uf argument");
  return collect(f.codomain(), [&](Mask b) { return a.contains(f.preimage(b)); });
}

UpSetFamilyMembership ufunctor_membership(const TotalMap& f, const UpSet& a) {
  require_same(a.universe(), f.domain(), "Uf argument");
  return [f, a](const BitVector& b) {
    Mask pre = 0;
    for (std::size_t y = 0; y < f.domain().size(); ++y) {
      if (b.test(f(y))) pre |= Mask{1} << y;
    }
    return a.contains(pre);
  };
}

UpSet vfunctor_map(const TotalMap& f, const UpSet& b) {
  require_same(b.universe(), f.codomain(), "Vf argument");
  return collect(f.domain(), [&](Mask a) { return b.contains(f.image(a)); });
}

Family preimage_family(const TotalMap& f, const UpSet& b) {
  require_same(b.universe(), f.codomain(), "preimage family argument");
  Family out(f.domain());
  for (Mask m : b.members()) out.insert(f.preimage(m));
  return out;
}

UpSet ufunctor_left_adjoint(const TotalMap& f, const UpSet& b) { return up_closure(preimage_family(f, b)); }

TotalMap as_total_map(const KleisliMorphism& rho) {
  const auto ups = enumerate_upsets(rho.codomain());
  std::vector<std::size_t> t;
  for (const auto& v : rho.values()) t.push_back(upset_index(ups, v));
  return TotalMap(rho.domain(), upset_universe(rho.codomain()), std::move(t));
}

KleisliMorphism precompose(const KleisliMorphism& rho, const TotalMap& f) {
  require_same(f.codomain(), rho.domain(), "precomposition");
  std::vector<UpSet> v;
  for (std::size_t x = 0; x < f.domain().size(); ++x) v.push_back(rho(f(x)));
  return KleisliMorphism(f.domain(), rho.codomain(), std::move(v));
}

KleisliMorphism apply_ufunctor(const TotalMap& f, const KleisliMorphism& rho) {
  std::vector<UpSet> v;
  for (const auto& u : rho.values()) v.push_back(ufunctor_map(f, u));
  return KleisliMorphism(rho.domain(), f.codomain(), std::move(v));
}

KleisliMorphism apply_vfunctor(const TotalMap& f, const KleisliMorphism& sigma) {
  std::vector<UpSet> v;
  for (const auto& u : sigma.values()) v.push_back(vfunctor_map(f, u));
  return KleisliMorphism(sigma.domain(), f.domain(), std::move(v));
}

KleisliMorphism diamond_lower(const TotalMap& f) {
  std::vector<UpSet> v;
  for (std::size_t x = 0; x < f.domain().size(); ++x) v.push_back(UpSet::principal(f.codomain(), Mask{1} << f(x)));
  return KleisliMorphism(f.domain(), f.codomain(), std::move(v));
}

KleisliMorphism diamond_upper(const TotalMap& f) {
  std::vector<UpSet> v;
  for (std::size_t y = 0; y < f.codomain().size(); ++y) {
    v.push_back(collect(f.domain(), [&](Mask a) { return ((f.image(a) >> y) & 1U) != 0; }));
  }
  return KleisliMorphism(f.codomain(), f.domain(), std::move(v));
}

KleisliMorphism to_kleisli(const MonotoneRelation& r) {
  return KleisliMorphism(r.target(), r.source(), r.mates());
}

MonotoneRelation to_monotone(const KleisliMorphism& rho) {
  return MonotoneRelation(rho.codomain(), rho.domain(), rho.values());
}

// ---------------------------------------------------------------------------

UCoalgebra::UCoalgebra(KleisliMorphism structure) : structure_(std::move(structure)) {
  require_same(structure_.domain(), structure_.codomain(), "coalgebra structure");
}

UCoalgebra to_coalgebra(const AbstractLogic& l) { return UCoalgebra(to_kleisli(l.entails())); }

bool is_logic_induced(const UCoalgebra& alpha) {
  const KleisliMorphism& a = alpha.structure();
  return leq(eta(alpha.carrier()), a) && leq(kleisli_star(a, a), a);
}

AbstractLogic to_logic(const UCoalgebra& alpha) { return AbstractLogic(to_monotone(alpha.structure())); }

std::vector<UCoalgebra> enumerate_coalgebras(const Universe& x) {
  const auto ups = enumerate_upsets(x);
  std::size_t total = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total *= ups.size();
    if (total > (std::size_t{1} << 16)) throw CapExceeded("too many coalgebras to enumerate");
  }
  std::vector<UCoalgebra> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<UpSet> v;
    std::size_t c = code;
    for (std::size_t i = 0; i < x.size(); ++i) {
      v.push_back(ups[c % ups.size()]);
      c /= ups.size();
    }
    out.emplace_back(KleisliMorphism(x, x, std::move(v)));
  }
  return out;
}

namespace {

void require_map_between(const TotalMap& f, const UCoalgebra& alpha, const UCoalgebra& beta) {
  require_same(f.domain(), alpha.carrier(), "map domain");
  require_same(f.codomain(), beta.carrier(), "map codomain");
}

}  // namespace

MapClassification classify_map(const TotalMap& f, const UCoalgebra& alpha, const UCoalgebra& beta) {
  require_map_between(f, alpha, beta);
  MapClassification c;
  c.preserving = true;
  c.conservative = true;
  c.open = true;
  for (std::size_t x = 0; x < f.domain().size(); ++x) {
    const UpSet pushed = ufunctor_map(f, alpha(x));
    const UpSet& target = beta(f(x));
    if (!pushed.is_subset_of(target)) c.preserving = false;
    if (!(pushed == target)) c.open = false;
    if (!(alpha(x) == vfunctor_map(f, target))) c.conservative = false;
  }
  c.progressive =
      beta.structure() == kleisli_star(diamond_lower(f), kleisli_star(alpha.structure(), diamond_upper(f)));
  return c;
}

CoalgebraicPreservingForms coalgebraic_preserving_forms(const TotalMap& f, const UCoalgebra& alpha,
                                                        const UCoalgebra& beta) {
  require_map_between(f, alpha, beta);
  const KleisliMorphism lower = diamond_lower(f);
  const KleisliMorphism upper = diamond_upper(f);
  const KleisliMorphism& a = alpha.structure();
  const KleisliMorphism& b = beta.structure();
  CoalgebraicPreservingForms p;
  p.source_side = leq(kleisli_star(a, upper), kleisli_star(upper, b));
  p.target_side = leq(kleisli_star(lower, a), kleisli_star(b, lower));
  p.functor_form = leq(apply_ufunctor(f, a), precompose(b, f));
  return p;
}

bool conservative_kleisli_form(const TotalMap& f, const UCoalgebra& alpha, const UCoalgebra& beta) {
  require_map_between(f, alpha, beta);
  return alpha.structure() ==
         kleisli_star(diamond_upper(f), kleisli_star(beta.structure(), diamond_lower(f)));
}

// ---------------------------------------------------------------------------

SumResult sum(std::span<const AbstractLogic> logics, std::span<const std::string> tags) {
  if (!tags.empty() && tags.size() != logics.size()) throw Error("one tag per summand required");
  std::vector<std::string> labels;
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < logics.size(); ++i) {
    const std::string tag = tags.empty() ? std::to_string(i + 1) : tags[i];
    offsets.push_back(labels.size());
    for (const auto& l : logics[i].carrier().labels()) labels.push_back(tag + "." + l);
  }
  const Universe total(std::move(labels));

  std::vector<Mask> table(total.subset_count());
  for (std::size_t a = 0; a < table.size(); ++a) {
    Mask closed = 0;
    for (std::size_t i = 0; i < logics.size(); ++i) {
      const Mask local = (static_cast<Mask>(a) >> offsets[i]) & logics[i].carrier().full_mask();
      closed |= logics[i].closure_of(local) << offsets[i];
    }
    table[a] = closed;
  }
  AbstractLogic logic = from_closure(ClosureOperator(PowersetMap(total, total, std::move(table))));

  std::vector<TotalMap> injections;
  for (std::size_t i = 0; i < logics.size(); ++i) {
    std::vector<std::size_t> t(logics[i].carrier().size());
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = offsets[i] + k;
    injections.emplace_back(logics[i].carrier(), total, std::move(t));
  }
  return SumResult{std::move(logic), std::move(injections)};
}

TotalMap copair(const SumResult& s, std::span<const TotalMap> components) {
  if (components.size() != s.injections.size()) throw Error("one component per summand required");
  if (components.empty()) throw Error("copairing of an empty sum needs an explicit codomain");
  const Universe& y = components.front().codomain();
  std::vector<std::size_t> t(s.logic.carrier().size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    require_same(components[i].domain(), s.injections[i].domain(), "copairing component");
    require_same(components[i].codomain(), y, "copairing component");
    for (std::size_t k = 0; k < components[i].domain().size(); ++k) t[s.injections[i](k)] = components[i](k);
  }
  return TotalMap(s.logic.carrier(), y, std::move(t));
}

std::optional<HomomorphicImage> homomorphic_image(const TotalMap& f, const UCoalgebra& alpha) {
  require_same(f.domain(), alpha.carrier(), "homomorphic image");
  std::vector<std::size_t> position(f.codomain().size(), f.codomain().size());
  std::vector<std::string> labels;
  for (std::size_t y = 0; y < f.codomain().size(); ++y) {
    if (std::find(f.targets().begin(), f.targets().end(), y) != f.targets().end()) {
      position[y] = labels.size();
      labels.push_back(f.codomain().label(y));
    }
  }
  const Universe image_carrier(std::move(labels));
  std::vector<std::size_t> t(f.domain().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = position[f(x)];
  TotalMap g(f.domain(), image_carrier, std::move(t));

  std::vector<std::optional<UpSet>> structure(image_carrier.size());
  for (std::size_t x = 0; x < f.domain().size(); ++x) {
    UpSet pushed = ufunctor_map(g, alpha(x));
    auto& slot = structure[g(x)];
    if (!slot) {
      slot = std::move(pushed);
    } else if (!(*slot == pushed)) {
      return std::nullopt;
    }
  }
  std::vector<UpSet> values;
  for (auto& s : structure) values.push_back(std::move(*s));
  return HomomorphicImage{g, UCoalgebra(KleisliMorphism(image_carrier, image_carrier, std::move(values)))};
}

}  // namespace ulog
