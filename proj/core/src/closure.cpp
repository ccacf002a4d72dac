#include "ulog/closure.hpp"

#include "ulog/powerset.hpp"

namespace ulog {

PowersetMap::PowersetMap(Universe source, Universe target, std::vector<Mask> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_.subset_count()) throw UniverseMismatch("table needs one entry per subset");
  const Mask full = target_.full_mask();
  for (auto m : table_) {
    if (!is_submask(m, full)) throw UnknownElement("table entry outside the target carrier");
  }
}

PowersetMap PowersetMap::identity(const Universe& x) {
  std::vector<Mask> t(x.subset_count());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = static_cast<Mask>(a);
  return PowersetMap(x, x, std::move(t));
}

PowersetMap PowersetMap::from_total_map(const TotalMap& f) {
  const Universe* x = f.domain().powerset_base();
  const Universe* y = f.codomain().powerset_base();
  if (x == nullptr || y == nullptr) throw UniverseMismatch("map is not between powerset carriers");
  std::vector<Mask> t(f.targets().begin(), f.targets().end());
  return PowersetMap(*x, *y, std::move(t));
}

bool PowersetMap::is_monotone() const {
  for (std::size_t a = 0; a < table_.size(); ++a) {
    for (std::size_t i = 0; i < source_.size(); ++i) {
      const std::size_t b = a | (std::size_t{1} << i);
      if (!is_submask(table_[a], table_[b])) return false;
    }
  }
  return true;
}

PowersetMap compose(const PowersetMap& g, const PowersetMap& f) {
  require_same(f.target(), g.source(), "powerset map composition");
  std::vector<Mask> t(f.table().size());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = g(f(static_cast<Mask>(a)));
  return PowersetMap(f.source(), g.target(), std::move(t));
}

bool leq(const PowersetMap& f, const PowersetMap& g) {
  require_same(f.source(), g.source(), "powerset map order");
  require_same(f.target(), g.target(), "powerset map order");
  for (std::size_t a = 0; a < f.table().size(); ++a) {
    if (!is_submask(f.table()[a], g.table()[a])) return false;
  }
  return true;
}

PowersetMap to_closure(const MonotoneRelation& r) {
  std::vector<Mask> t(r.source().subset_count());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = r.image(static_cast<Mask>(a));
  return PowersetMap(r.source(), r.target(), std::move(t));
}

std::string ClosureViolation::describe(const Universe& x) const {
  const char* name = axiom == Axiom::monotone    ? "monotonicity"
                     : axiom == Axiom::extensive ? "extensivity"
                                                 : "idempotence";
  return std::string(name) + " fails at " + x.format_mask(witness);
}

std::optional<ClosureViolation> check_closure_axioms(const PowersetMap& table) {
  require_same(table.source(), table.target(), "closure operator");
  const auto& t = table.table();
  const std::size_t n = table.source().size();
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t b = a | (std::size_t{1} << i);
      if (!is_submask(t[a], t[b])) return ClosureViolation{ClosureViolation::Axiom::monotone, static_cast<Mask>(a)};
    }
  }
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (!is_submask(static_cast<Mask>(a), t[a])) {
      return ClosureViolation{ClosureViolation::Axiom::extensive, static_cast<Mask>(a)};
    }
  }
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (!is_submask(t[t[a]], t[a])) return ClosureViolation{ClosureViolation::Axiom::idempotent, static_cast<Mask>(a)};
  }
  return std::nullopt;
}

bool is_closure_operator(const PowersetMap& table) { return !check_closure_axioms(table).has_value(); }

ClosureOperator::ClosureOperator(PowersetMap table) : table_(std::move(table)) {
  if (auto v = check_closure_axioms(table_)) {
    throw AxiomViolation("not a closure operator: " + v->describe(table_.source()));
  }
}

ClosureOperator ClosureOperator::identity(const Universe& x) { return ClosureOperator(PowersetMap::identity(x)); }

ClosureOperator ClosureOperator::top(const Universe& x) {
  return ClosureOperator(PowersetMap(x, x, std::vector<Mask>(x.subset_count(), x.full_mask())));
}

ClosureOperator closure_of(const AbstractLogic& l) {
  return ClosureOperator(PowersetMap(l.carrier(), l.carrier(), l.closure_table()));
}

AbstractLogic from_closure(const ClosureOperator& c) {
  const Universe& x = c.carrier();
  std::vector<Family> mates(x.size(), Family(x));
  for (std::size_t a = 0; a < x.subset_count(); ++a) {
    const Mask closed = c(static_cast<Mask>(a));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((closed >> i) & 1U) mates[i].insert(static_cast<Mask>(a));
    }
  }
  std::vector<UpSet> ups;
  for (auto& m : mates) ups.emplace_back(std::move(m));
  return AbstractLogic(MonotoneRelation(x, x, std::move(ups)));
}

TotalMap preimage_map(const TotalMap& f) {
  const Universe px = powerset_universe(f.domain());
  const Universe py = powerset_universe(f.codomain());
  std::vector<std::size_t> t(py.size());
  for (std::size_t b = 0; b < t.size(); ++b) t[b] = f.preimage(static_cast<Mask>(b));
  return TotalMap(py, px, std::move(t));
}

namespace {

void require_map_between(const TotalMap& f, const ClosureOperator& c, const ClosureOperator& d) {
  require_same(f.domain(), c.carrier(), "map domain");
  require_same(f.codomain(), d.carrier(), "map codomain");
}

PowersetMap pulled_back(const TotalMap& f, const ClosureOperator& d) {
  const PowersetMap pf = PowersetMap::from_total_map(direct_image_map(f));
  const PowersetMap qf = PowersetMap::from_total_map(preimage_map(f));
  return compose(qf, compose(d.map(), pf));
}

}  // namespace

bool is_continuous(const TotalMap& f, const ClosureOperator& c, const ClosureOperator& d) {
  require_map_between(f, c, d);
  for (std::size_t a = 0; a < c.map().table().size(); ++a) {
    const auto am = static_cast<Mask>(a);
    if (!is_submask(f.image(c(am)), d(f.image(am)))) return false;
  }
  return true;
}

bool is_continuous_adjoint_form(const TotalMap& f, const ClosureOperator& c, const ClosureOperator& d) {
  require_map_between(f, c, d);
  return leq(c.map(), pulled_back(f, d));
}

bool is_initial(const TotalMap& f, const ClosureOperator& c, const ClosureOperator& d) {
  require_map_between(f, c, d);
  return c.map() == pulled_back(f, d);
}

OpenVerdict is_open_pointwise(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m) {
  if (!is_consequence_preserving(f, l, m)) return OpenVerdict::not_preserving;
  const Universe& x = l.carrier();
  const Universe& y = m.carrier();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t b = 0; b < y.subset_count(); ++b) {
      const auto bm = static_cast<Mask>(b);
      if (!m.entails(bm, f(i))) continue;
      bool witnessed = false;
      for (std::size_t a = 0; a < x.subset_count() && !witnessed; ++a) {
        const auto am = static_cast<Mask>(a);
        witnessed = l.entails(am, i) && is_submask(f.image(am), bm);
      }
      if (!witnessed) return OpenVerdict::not_open;
    }
  }
  return OpenVerdict::open;
}

OpenVerdict is_open_equational(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m) {
  if (!is_consequence_preserving(f, l, m)) return OpenVerdict::not_preserving;
  const MonotoneRelation upper = upper_sharp(f);
  return kcompose(upper, m.entails()) == kcompose(l.entails(), upper) ? OpenVerdict::open
                                                                     : OpenVerdict::not_open;
}

}  // namespace ulog
