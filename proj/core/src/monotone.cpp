#include "ulog/monotone.hpp"

#include <algorithm>

#include "ulog/powerset.hpp"
#include "ulog/testing/mutation.hpp"

namespace ulog {

#ifdef ULOG_MUTATION_HOOKS
namespace testing {
Mutations& mutations() {
  static Mutations m;
  return m;
}
}  // namespace testing
#endif

namespace {

const Universe& powerset_base_of(const Relation& raw, std::string_view what) {
  const Universe* base = raw.source().powerset_base();
  if (base == nullptr) throw UniverseMismatch(std::string(what) + ": source is not a powerset carrier");
  return *base;
}

Family column(const Relation& raw, const Universe& base, std::size_t y) {
  Family f(base);
  for (std::size_t a = 0; a < raw.source().size(); ++a) {
    if (raw.relates(a, y)) f.insert(static_cast<Mask>(a));
  }
  return f;
}

}  // namespace

MonotoneRelation::MonotoneRelation(Universe source, Universe target, std::vector<UpSet> mates)
    : source_(std::move(source)), target_(std::move(target)), mates_(std::move(mates)) {
  require_size_at_most(source_, kHardCap, "monotone relation");
  require_size_at_most(target_, kHardCap, "monotone relation");
  if (mates_.size() != target_.size()) throw UniverseMismatch("one mate per target element required");
  for (const auto& m : mates_) require_same(m.universe(), source_, "monotone relation mate");
}

MonotoneRelation MonotoneRelation::from_relation(const Relation& raw) {
  const Universe& base = powerset_base_of(raw, "monotone relation");
  std::vector<UpSet> mates;
  mates.reserve(raw.target().size());
  for (std::size_t y = 0; y < raw.target().size(); ++y) mates.emplace_back(column(raw, base, y));
  return MonotoneRelation(base, raw.target(), std::move(mates));
}

Relation MonotoneRelation::to_relation() const {
  Relation raw(powerset_universe(source_), target_);
  for (std::size_t y = 0; y < mates_.size(); ++y) {
    mates_[y].bits().for_each_set([&](std::size_t a) { raw.set(a, y); });
  }
  return raw;
}

Mask MonotoneRelation::image(Mask a) const {
  Mask out = 0;
  for (std::size_t y = 0; y < mates_.size(); ++y) {
    if (mates_[y].contains(a)) out |= Mask{1} << y;
  }
  return out;
}

std::string MonotoneRelation::encode() const {
  std::string out;
  for (std::size_t y = 0; y < mates_.size(); ++y) {
    if (y != 0) out += '|';
    out += mates_[y].bits().to_string();
  }
  return out;
}

bool leq(const MonotoneRelation& r, const MonotoneRelation& r2) {
  require_same(r.source(), r2.source(), "monotone relation order");
  require_same(r.target(), r2.target(), "monotone relation order");
  for (std::size_t y = 0; y < r.target().size(); ++y) {
    if (!r.mate(y).is_subset_of(r2.mate(y))) return false;
  }
  return true;
}

MonotoneRelation delta(const Universe& x) {
  std::vector<UpSet> mates;
  for (std::size_t i = 0; i < x.size(); ++i) mates.push_back(UpSet::principal(x, Mask{1} << i));
  return MonotoneRelation(x, x, std::move(mates));
}

MonotoneRelation kcompose(const MonotoneRelation& s, const MonotoneRelation& r) {
  require_same(r.target(), s.source(), "monotone composition");
  const Universe& x = r.source();
  const std::size_t subsets = x.subset_count();
  std::vector<Family> out(s.target().size(), Family(x));
#ifdef ULOG_MUTATION_HOOKS
  const bool corrupt = testing::mutations().corrupt_kcompose.load();
#endif
  for (std::size_t a = 0; a < subsets; ++a) {
    // B may be any subset of the elements A entails under r.
    const Mask reach = r.image(static_cast<Mask>(a));
    for (std::size_t z = 0; z < out.size(); ++z) {
      bool witnessed = false;
      for_each_submask(reach, [&](Mask b) {
#ifdef ULOG_MUTATION_HOOKS
        if (corrupt && b == reach) return;
#endif
        if (!witnessed && s.relates(b, z)) witnessed = true;
      });
      if (witnessed) out[z].insert(static_cast<Mask>(a));
    }
  }
  std::vector<UpSet> mates;
  mates.reserve(out.size());
  for (auto& f : out) mates.emplace_back(std::move(f));
  return MonotoneRelation(x, s.target(), std::move(mates));
}

Relation kcompose_definitional(const Relation& s, const Relation& r) {
  const Universe& x = powerset_base_of(r, "definitional composition");
  require_same(s.source(), powerset_universe(r.target()), "definitional composition");
  const Relation union_converse = converse(multiplication_map(x));
  return compose(s, compose(lift(r), union_converse));
}

MonotoneRelation lower_sharp(const TotalMap& f) {
  const Universe& x = f.domain();
  std::vector<Family> mates(f.codomain().size(), Family(x));
  for (std::size_t a = 0; a < x.subset_count(); ++a) {
    const Mask img = f.image(static_cast<Mask>(a));
    for (std::size_t y = 0; y < mates.size(); ++y) {
      if ((img >> y) & 1U) mates[y].insert(static_cast<Mask>(a));
    }
  }
  std::vector<UpSet> ups;
  for (auto& m : mates) ups.emplace_back(std::move(m));
  return MonotoneRelation(x, f.codomain(), std::move(ups));
}

MonotoneRelation upper_sharp(const TotalMap& f) {
  std::vector<UpSet> mates;
  for (std::size_t i = 0; i < f.domain().size(); ++i) {
    mates.push_back(UpSet::principal(f.codomain(), Mask{1} << f(i)));
  }
  return MonotoneRelation(f.codomain(), f.domain(), std::move(mates));
}

bool is_monotone(const Relation& raw) {
  const Universe& base = powerset_base_of(raw, "monotonicity");
  for (std::size_t y = 0; y < raw.target().size(); ++y) {
    if (!column(raw, base, y).is_up_closed()) return false;
  }
  return true;
}

ConsequenceAxioms consequence_axioms(const Relation& raw) {
  const Universe& x = powerset_base_of(raw, "consequence axioms");
  require_same(raw.target(), x, "consequence axioms");
  const std::size_t n = x.size();
  const std::size_t subsets = raw.source().size();
  // entailed[A] = {x | A raw x}
  std::vector<Mask> entailed(subsets, 0);
  for (std::size_t a = 0; a < subsets; ++a) entailed[a] = static_cast<Mask>(raw.row(a).to_word());

  ConsequenceAxioms ax;
  ax.reflexivity = true;
  ax.singleton_reflexivity = true;
  ax.weakening = true;
  ax.cut = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (((entailed[std::size_t{1} << i] >> i) & 1U) == 0) ax.singleton_reflexivity = false;
  }
  for (std::size_t a = 0; a < subsets; ++a) {
    const auto am = static_cast<Mask>(a);
    if (!is_submask(am, entailed[a])) ax.reflexivity = false;
    for (std::size_t b = 0; b < subsets; ++b) {
      const auto bm = static_cast<Mask>(b);
      if (is_submask(am, bm) && !is_submask(entailed[a], entailed[b])) ax.weakening = false;
      // A entails all of B and B |- x imply A |- x.
      if (is_submask(bm, entailed[a]) && !is_submask(entailed[b], entailed[a])) ax.cut = false;
    }
  }
  return ax;
}

bool is_consequence(const Relation& raw) { return consequence_axioms(raw).holds(); }

bool is_monoid(const MonotoneRelation& r) {
  if (!(r.source() == r.target())) return false;
  return leq(delta(r.source()), r) && leq(kcompose(r, r), r);
}

// ---------------------------------------------------------------------------

AbstractLogic::AbstractLogic(MonotoneRelation entails) : entails_(std::move(entails)) {
  if (!is_monoid(entails_)) throw AxiomViolation("relation is not a consequence relation");
  const std::size_t subsets = carrier().subset_count();
  closure_.resize(subsets);
  for (std::size_t a = 0; a < subsets; ++a) closure_[a] = entails_.image(static_cast<Mask>(a));
}

std::string AbstractLogic::encode() const {
  std::string out;
  for (std::size_t a = 0; a < closure_.size(); ++a) {
    if (a != 0) out += ' ';
    out += carrier().format_mask(static_cast<Mask>(a)) + "=>" + carrier().format_mask(closure_[a]);
  }
  return out;
}

AbstractLogic generate(const Universe& x, std::span<const Rule> rules) {
  for (const auto& rule : rules) {
    if (rule.conclusion >= x.size() || (rule.premises >> x.size()) != 0) {
      throw UnknownElement("rule mentions an element outside the carrier");
    }
  }
  const std::size_t subsets = x.subset_count();
  std::vector<Family> mates(x.size(), Family(x));
  for (std::size_t a = 0; a < subsets; ++a) {
    Mask c = static_cast<Mask>(a);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rule : rules) {
        const Mask bit = Mask{1} << rule.conclusion;
        if ((c & bit) == 0 && is_submask(rule.premises, c)) {
          c |= bit;
          changed = true;
        }
      }
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((c >> i) & 1U) mates[i].insert(static_cast<Mask>(a));
    }
  }
  std::vector<UpSet> ups;
  for (auto& m : mates) ups.emplace_back(std::move(m));
  return AbstractLogic(MonotoneRelation(x, x, std::move(ups)));
}

AbstractLogic membership_logic(const Universe& x) { return AbstractLogic(delta(x)); }

// ---------------------------------------------------------------------------

bool PreservingProfile::agree() const {
  const auto e = entries();
  return std::all_of(e.begin(), e.end(), [&](bool b) { return b == e[0]; });
}

namespace {

void require_map_between(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m) {
  require_same(f.domain(), l.carrier(), "map domain");
  require_same(f.codomain(), m.carrier(), "map codomain");
}

bool definitional_preservation(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m) {
  for (std::size_t a = 0; a < l.closure_table().size(); ++a) {
    const Mask image = f.image(static_cast<Mask>(a));
    const Mask entailed = l.closure_of(static_cast<Mask>(a));
    if (!is_submask(f.image(entailed), m.closure_of(image))) return false;
  }
  return true;
}

}  // namespace

PreservingProfile preserving_profile(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m) {
  require_map_between(f, l, m);
  const Relation lraw = l.entails().to_relation();
  const Relation mraw = m.entails().to_relation();
  const Relation fr = graph(f);
  const Relation fc = converse(f);
  const TotalMap pf = direct_image_map(f);
  const Relation pfr = graph(pf);
  const Relation pfc = converse(pf);
  const MonotoneRelation lower = lower_sharp(f);
  const MonotoneRelation upper = upper_sharp(f);
  const MonotoneRelation& lk = l.entails();
  const MonotoneRelation& mk = m.entails();

  PreservingProfile p;
  p.definitional = definitional_preservation(f, l, m);
  const Relation m_after_pf = compose(mraw, pfr);
  p.graph_square = leq(compose(fr, lraw), m_after_pf);
  p.adjoint_bound = leq(lraw, compose(fc, m_after_pf));
  p.converse_square = leq(compose(lraw, pfc), compose(fc, mraw));
  p.sharp_bound = leq(lk, kcompose(upper, kcompose(mk, lower)));
  p.upper_sharp_square = leq(kcompose(lk, upper), kcompose(upper, mk));
  p.lower_sharp_square = leq(kcompose(lower, lk), kcompose(mk, lower));
  return p;
}

bool is_consequence_preserving(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m) {
  require_map_between(f, l, m);
  return definitional_preservation(f, l, m);
}

ConservativeProfile conservative_profile(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m) {
  require_map_between(f, l, m);
  ConservativeProfile p;
  p.definitional = true;
  for (std::size_t a = 0; a < l.closure_table().size(); ++a) {
    const Mask image = f.image(static_cast<Mask>(a));
    // x is entailed iff f(x) is entailed by the image.
    if (l.closure_of(static_cast<Mask>(a)) != f.preimage(m.closure_of(image))) p.definitional = false;
  }
  const Relation lraw = l.entails().to_relation();
  const Relation mraw = m.entails().to_relation();
  p.relational = lraw == compose(converse(f), compose(mraw, graph(direct_image_map(f))));
  p.kleisli = l.entails() == kcompose(upper_sharp(f), kcompose(m.entails(), lower_sharp(f)));
  return p;
}

bool is_conservative(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m) {
  return conservative_profile(f, l, m).definitional;
}

}  // namespace ulog
