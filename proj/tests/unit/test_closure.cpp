#include <doctest.h>

#include "ulog/closure.hpp"
#include "ulog/coalgebra.hpp"
#include "ulog/enumerate.hpp"
#include "ulog/powerset.hpp"

using namespace ulog;

namespace {

const Universe kA = Universe::standard(1);
const Universe kAB = Universe::standard(2);
const Universe kY({"y"});

AbstractLogic a_entails_b() { return generate(kAB, std::vector<Rule>{{0b01, 1}}); }

// Every B entailing f(x) in m has some A entailing x in l with f(A) inside B.
bool open_by_search(const TotalMap& f, const AbstractLogic& l, const AbstractLogic& m) {
  for (std::size_t x = 0; x < l.carrier().size(); ++x) {
    for (Mask b = 0; b < m.carrier().subset_count(); ++b) {
      if (!m.entails(b, f(x))) continue;
      bool found = false;
      for (Mask a = 0; a < l.carrier().subset_count() && !found; ++a) {
        found = l.entails(a, x) && is_submask(f.image(a), b);
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("closure of a relation") {
  CHECK(to_closure(delta(kAB)) == PowersetMap::identity(kAB));
  CHECK(to_closure(a_entails_b().entails()).table() == std::vector<Mask>{0, 3, 2, 3});
  const TotalMap f(Universe::standard(3), kAB, {0, 1, 1});
  CHECK(to_closure(lower_sharp(f)) == PowersetMap::from_total_map(direct_image_map(f)));
  CHECK(to_closure(upper_sharp(f)) == PowersetMap::from_total_map(preimage_map(f)));
}

TEST_CASE("from closure") {
  CHECK(from_closure(ClosureOperator::identity(kAB)) == membership_logic(kAB));
  const ClosureOperator c(PowersetMap(kA, kA, {1, 1}));
  CHECK(from_closure(c).entails(0, 0));
  CHECK(c == ClosureOperator::top(kA));
}

TEST_CASE("round trip over every logic on three points") {
  const auto logics = enumerate_logics(Universe::standard(3));
  CHECK(logics.size() == 61);
  for (const auto& l : logics) {
    CHECK(from_closure(closure_of(l)) == l);
    CHECK(closure_of(from_closure(closure_of(l))) == closure_of(l));
  }
}

TEST_CASE("closure axioms") {
  CHECK(is_closure_operator(PowersetMap::identity(kAB)));
  CHECK(is_closure_operator(PowersetMap(kAB, kAB, {3, 3, 3, 3})));

  const auto shrink = check_closure_axioms(PowersetMap(kA, kA, {0, 0}));
  REQUIRE(shrink.has_value());
  CHECK(shrink->axiom == ClosureViolation::Axiom::extensive);
  CHECK(shrink->witness == 1);
  CHECK_THROWS_AS(ClosureOperator(PowersetMap(kA, kA, {0, 0})), AxiomViolation);

  const auto drop = check_closure_axioms(PowersetMap(kAB, kAB, {1, 1, 2, 3}));
  REQUIRE(drop.has_value());
  CHECK(drop->axiom == ClosureViolation::Axiom::monotone);

  // {} -> {a} -> {a,b}
  const auto loop = check_closure_axioms(PowersetMap(kAB, kAB, {1, 3, 3, 3}));
  REQUIRE(loop.has_value());
  CHECK(loop->axiom == ClosureViolation::Axiom::idempotent);
  CHECK(loop->witness == 0);
  CHECK_FALSE(loop->describe(kAB).empty());
}

TEST_CASE("continuity and initiality examples") {
  const ClosureOperator c = closure_of(a_entails_b());
  const TotalMap id = TotalMap::identity(kAB);
  CHECK(is_continuous(id, c, c));
  CHECK(is_initial(id, c, c));

  const TotalMap inclusion(kA, kAB, {0});
  const ClosureOperator ident = ClosureOperator::identity(kA);
  CHECK(is_continuous(inclusion, ident, c));
  CHECK(is_continuous_adjoint_form(inclusion, ident, c));
  // Qf.d.Pf sends {} to {} and {a} to f^{-1}({a,b}) = {a}
  CHECK(is_initial(inclusion, ident, c));

  const TotalMap swap(kAB, kAB, {1, 0});
  CHECK_FALSE(is_continuous(swap, c, c));
  CHECK_FALSE(is_continuous_adjoint_form(swap, c, c));
  CHECK_FALSE(is_initial(swap, c, c));
}

TEST_CASE("open maps") {
  const AbstractLogic l = a_entails_b();
  const TotalMap id = TotalMap::identity(kAB);
  CHECK(is_open_pointwise(id, l, l) == OpenVerdict::open);
  CHECK(is_open_equational(id, l, l) == OpenVerdict::open);

  const std::vector<AbstractLogic> parts = {l, membership_logic(kA)};
  const SumResult s = sum(parts);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    CHECK(is_open_pointwise(s.injections[i], parts[i], s.logic) == OpenVerdict::open);
    CHECK(is_open_equational(s.injections[i], parts[i], s.logic) == OpenVerdict::open);
  }

  const TotalMap collapse(kAB, kY, {0, 0});
  const AbstractLogic src = membership_logic(kAB), dst = membership_logic(kY);
  const bool expect = open_by_search(collapse, src, dst);
  CHECK(expect);
  CHECK(is_open_pointwise(collapse, src, dst) == OpenVerdict::open);
  CHECK(is_open_equational(collapse, src, dst) == OpenVerdict::open);

  const TotalMap swap(kAB, kAB, {1, 0});
  CHECK(is_open_pointwise(swap, l, l) == OpenVerdict::not_preserving);
  CHECK(is_open_equational(swap, l, l) == OpenVerdict::not_preserving);

  // preserving but not open: the inclusion of {a} into the {a} |- b logic misses b's witnesses
  const TotalMap b_only(kA, kAB, {1});
  CHECK(is_consequence_preserving(b_only, membership_logic(kA), l));
  CHECK(open_by_search(b_only, membership_logic(kA), l) == false);
  CHECK(is_open_pointwise(b_only, membership_logic(kA), l) == OpenVerdict::not_open);
  CHECK(is_open_equational(b_only, membership_logic(kA), l) == OpenVerdict::not_open);
}

TEST_CASE("open verdicts agree with witness search at size <= 2") {
  for (std::size_t n = 0; n <= 2; ++n) {
    for (std::size_t m = 0; m <= 2; ++m) {
      const Universe x = Universe::standard(n), y({"p", "q"});
      const Universe yy = m == 2 ? y : (m == 1 ? Universe({"p"}) : Universe());
      for (const auto& l : enumerate_logics(x)) {
        for (const auto& k : enumerate_logics(yy)) {
          for (const auto& f : enumerate_maps(x, yy)) {
            const OpenVerdict v = is_open_pointwise(f, l, k);
            if (!is_consequence_preserving(f, l, k)) {
              CHECK(v == OpenVerdict::not_preserving);
            } else {
              CHECK((v == OpenVerdict::open) == open_by_search(f, l, k));
            }
            CHECK(is_open_equational(f, l, k) == v);
          }
        }
      }
    }
  }
}

TEST_CASE("preimage map") {
  CHECK(preimage_map(TotalMap::identity(kAB)) == TotalMap::identity(powerset_universe(kAB)));
  const TotalMap q = preimage_map(TotalMap(kAB, kY, {0, 0}));
  CHECK(q(1) == 3);
  CHECK(q(0) == 0);
  for (const auto& f : enumerate_maps(Universe::standard(3), Universe::standard(3))) {
    for (Mask a = 0; a < 8; ++a) {
      for (Mask b = 0; b < 8; ++b) CHECK(is_submask(f.image(a), b) == is_submask(a, f.preimage(b)));
    }
  }
}

TEST_CASE("powerset map helpers") {
  const PowersetMap id = PowersetMap::identity(kAB);
  const PowersetMap top(kAB, kAB, {3, 3, 3, 3});
  CHECK(leq(id, top));
  CHECK_FALSE(leq(top, id));
  CHECK(compose(top, id) == top);
  CHECK(top.is_monotone());
  CHECK_FALSE(PowersetMap(kAB, kAB, {3, 0, 0, 0}).is_monotone());
}
