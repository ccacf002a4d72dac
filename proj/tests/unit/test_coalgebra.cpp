#include <doctest.h>

#include "ulog/closure.hpp"
#include "ulog/coalgebra.hpp"
#include "ulog/enumerate.hpp"

using namespace ulog;

namespace {

const Universe kA = Universe::standard(1);
const Universe kAB = Universe::standard(2);
const Universe kABC = Universe::standard(3);
const Universe kY({"y"});
const Universe kPQ({"p", "q"});

AbstractLogic a_entails_b() { return generate(kAB, std::vector<Rule>{{0b01, 1}}); }

UpSet upset_of(const Universe& x, std::vector<Mask> members) { return UpSet(Family::of_masks(x, members)); }

KleisliMorphism progressive_push(const TotalMap& f, const UCoalgebra& alpha) {
  return kleisli_star(diamond_lower(f), kleisli_star(alpha.structure(), diamond_upper(f)));
}

}  // namespace

TEST_CASE("functor on up-sets") {
  const UpSet a = upset_of(kAB, {0b01, 0b11});
  CHECK(ufunctor_map(TotalMap::identity(kAB), a) == a);
  const TotalMap constant(kAB, kY, {0, 0});
  CHECK(ufunctor_map(constant, a).to_string() == "{{y}}");
  const auto member = ufunctor_membership(constant, a);
  CHECK(member(BitVector::from_word(1, 1)));
  CHECK_FALSE(member(BitVector::from_word(1, 0)));
}

TEST_CASE("the literal preimage family need not be up-closed") {
  const TotalMap collapse(kAB, kPQ, {0, 0});
  const UpSet b = upset_of(kPQ, {0b10, 0b11});
  const Family literal = preimage_family(collapse, b);
  CHECK(literal.members() == std::vector<Mask>{0b00, 0b11});
  CHECK_FALSE(literal.is_up_closed());
  CHECK(ufunctor_left_adjoint(collapse, b) == UpSet::top(kAB));
  // right adjoint: A with f(A) in {{q},{p,q}}; f(A) is {} or {p}
  CHECK(vfunctor_map(collapse, b).members().empty());
}

TEST_CASE("Uf has a left and a right adjoint on all up-set pairs up to size 3") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      const Universe x = Universe::standard(n);
      std::vector<std::string> labels = {"p", "q", "r"};
      labels.resize(m);
      const Universe yy(labels);
      const auto ux = enumerate_upsets(x);
      const auto uy = enumerate_upsets(yy);
      for (const auto& f : enumerate_maps(x, yy)) {
        for (const auto& a : ux) {
          const UpSet ua = ufunctor_map(f, a);
          for (const auto& b : uy) {
            CHECK(ufunctor_left_adjoint(f, b).is_subset_of(a) == b.is_subset_of(ua));
            CHECK(ua.is_subset_of(b) == a.is_subset_of(vfunctor_map(f, b)));
          }
        }
      }
    }
  }
}

TEST_CASE("unit and sharp") {
  CHECK(eta(kAB)(0).to_string() == "{{a},{a,b}}");
  const Universe ua = upset_universe(kA);
  CHECK(ua.labels() == std::vector<std::string>{"{}", "{{a}}", "{{},{a}}"});
  CHECK(sharp(Subset::full(kA)).mask() == 0b110);
  CHECK(sharp(Subset(kA)).mask() == 0b100);
  CHECK_THROWS_AS(sharp(Subset(Universe::standard(6))), CapExceeded);
}

TEST_CASE("multiplication examples") {
  const Universe ua = upset_universe(kA);
  const UpSet above = up_closure(Family::of_masks(ua, std::vector<Mask>{0b110}));
  CHECK(mu_apply(above.family(), kA).to_string() == "{{a}}");
  CHECK(mu_apply(UpSet::top(ua).family(), kA) == UpSet::top(kA));
  CHECK(mu_apply(Family(ua), kA) == UpSet(kA));
  CHECK_THROWS_AS(mu_apply(Family::of_masks(ua, std::vector<Mask>{0b110}), kA), AxiomViolation);
  const auto pred = [](const BitVector& b) { return b.test(1); };
  CHECK(mu_apply(pred, kA).to_string() == "{{a}}");
}

TEST_CASE("star units, logic idempotence and the definitional path") {
  const UCoalgebra alpha = to_coalgebra(a_entails_b());
  const KleisliMorphism& s = alpha.structure();
  CHECK(kleisli_star(s, eta(kAB)) == s);
  CHECK(kleisli_star(eta(kAB), s) == s);
  CHECK(kleisli_star(s, s) == s);
  for (std::size_t n = 0; n <= 2; ++n) {
    const Universe x = Universe::standard(n);
    for (const auto& rho : enumerate_coalgebras(x)) {
      for (const auto& sigma : enumerate_coalgebras(x)) {
        CHECK(kleisli_star(rho.structure(), sigma.structure()) ==
              kleisli_star_definitional(rho.structure(), sigma.structure()));
      }
    }
  }
}

TEST_CASE("views of a logic") {
  CHECK(to_coalgebra(membership_logic(kAB)).structure() == eta(kAB));
  const UCoalgebra alpha = to_coalgebra(a_entails_b());
  CHECK(alpha(1).to_string() == "{{a},{b},{a,b}}");
  CHECK(alpha(0).to_string() == "{{a},{a,b}}");
  CHECK(to_kleisli(delta(kAB)) == eta(kAB));
  CHECK(to_monotone(alpha.structure()) == a_entails_b().entails());
  CHECK(to_logic(alpha) == a_entails_b());
}

TEST_CASE("order embedding of the translation at size 2") {
  std::vector<MonotoneRelation> all;
  for (const auto& c : enumerate_coalgebras(kAB)) all.push_back(to_monotone(c.structure()));
  CHECK(all.size() == 36);
  for (const auto& r : all) {
    for (const auto& r2 : all) {
      CHECK(leq(to_kleisli(r), to_kleisli(r2)) == leq(r, r2));
      CHECK(to_kleisli(kcompose(r2, r)) == kleisli_star(to_kleisli(r), to_kleisli(r2)));
    }
  }
}

TEST_CASE("logic-induced coalgebras") {
  CHECK(is_logic_induced(UCoalgebra(eta(kAB))));
  CHECK(is_logic_induced(UCoalgebra(KleisliMorphism(kAB, kAB, {UpSet::top(kAB), UpSet::top(kAB)}))));
  const UCoalgebra broken(KleisliMorphism(kAB, kAB, {eta(kAB)(0), upset_of(kAB, {0b01, 0b11})}));
  CHECK_FALSE(is_logic_induced(broken));
  CHECK_THROWS_AS(to_logic(broken), AxiomViolation);
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& l : enumerate_logics(Universe::standard(n))) CHECK(is_logic_induced(to_coalgebra(l)));
  }
  std::size_t induced = 0;
  for (const auto& c : enumerate_coalgebras(kAB)) induced += is_logic_induced(c) ? 1 : 0;
  CHECK(induced == 7);
}

TEST_CASE("diamonds") {
  const TotalMap id = TotalMap::identity(kAB);
  CHECK(diamond_lower(id) == eta(kAB));
  CHECK(diamond_upper(id) == eta(kAB));
  const TotalMap constant(kAB, kY, {0, 0});
  CHECK(diamond_upper(constant)(0).to_string() == "{{a},{b},{a,b}}");
  CHECK(diamond_lower(constant)(1).to_string() == "{{y}}");
  for (const auto& f : enumerate_maps(kAB, kAB)) {
    for (const auto& rho : enumerate_coalgebras(kAB)) {
      CHECK(kleisli_star(rho.structure(), diamond_lower(f)) == precompose(rho.structure(), f));
      CHECK(kleisli_star(diamond_upper(f), rho.structure()) == apply_vfunctor(f, rho.structure()));
    }
  }
  CHECK(to_kleisli(lower_sharp(constant)) == diamond_upper(constant));
  CHECK(to_kleisli(upper_sharp(constant)) == diamond_lower(constant));
}

TEST_CASE("classification examples") {
  const UCoalgebra alpha = to_coalgebra(a_entails_b());
  const MapClassification self = classify_map(TotalMap::identity(kAB), alpha, alpha);
  CHECK(self.preserving);
  CHECK(self.conservative);
  CHECK(self.progressive);
  CHECK(self.open);

  const std::vector<AbstractLogic> parts = {a_entails_b(), membership_logic(kA)};
  const SumResult s = sum(parts);
  const MapClassification k1 = classify_map(s.injections[0], alpha, to_coalgebra(s.logic));
  CHECK(k1.open);
  CHECK(k1.conservative);

  const TotalMap relabel(kAB, kPQ, {1, 0});
  const AbstractLogic moved = generate(kPQ, std::vector<Rule>{{0b10, 0}});
  const MapClassification r = classify_map(relabel, alpha, to_coalgebra(moved));
  CHECK(r.open);
  CHECK(r.progressive);
}

TEST_CASE("progressive push of a logic along a surjection can fail to be a logic") {
  // c({}) = {a}, c({b}) = {a,b}, c({c}) = {a,b,c}; a and c are merged
  const AbstractLogic l = generate(kABC, std::vector<Rule>{{0, 0}, {0b100, 1}});
  REQUIRE(closure_of(l)(0) == 0b001);
  REQUIRE(closure_of(l)(0b010) == 0b011);
  REQUIRE(closure_of(l)(0b100) == 0b111);
  const TotalMap f(kABC, kPQ, {0, 1, 0});
  const UCoalgebra alpha = to_coalgebra(l);
  const UCoalgebra beta(progressive_push(f, alpha));
  CHECK(classify_map(f, alpha, beta).progressive);
  CHECK(is_logic_induced(alpha));
  CHECK_FALSE(is_logic_induced(beta));
}

TEST_CASE("progressive push along a bijection stays a logic") {
  const TotalMap f(kABC, kABC, {2, 0, 1});
  for (const auto& l : enumerate_logics(kABC)) {
    const UCoalgebra beta(progressive_push(f, to_coalgebra(l)));
    CHECK(is_logic_induced(beta));
  }
}

TEST_CASE("sums") {
  const std::vector<AbstractLogic> memberships = {membership_logic(kA), membership_logic(kAB)};
  const SumResult plain = sum(memberships);
  CHECK(plain.logic == membership_logic(plain.logic.carrier()));
  CHECK(plain.logic.carrier().labels() == std::vector<std::string>{"1.a", "2.a", "2.b"});

  const Universe xy({"x", "y"});
  const std::vector<AbstractLogic> parts = {membership_logic(kA), generate(xy, std::vector<Rule>{{0b01, 1}})};
  const std::vector<std::string> tags = {"L", "M"};
  const SumResult s = sum(parts, tags);
  const Universe& c = s.logic.carrier();
  CHECK(c.labels() == std::vector<std::string>{"L.a", "M.x", "M.y"});
  CHECK(c.format_mask(s.logic.closure_of(0b011)) == "{L.a,M.x,M.y}");
  REQUIRE(s.injections.size() == 2);
  CHECK(s.injections[1].targets() == std::vector<std::size_t>{1, 2});

  const SumResult empty = sum(std::vector<AbstractLogic>{});
  CHECK(empty.logic.carrier().empty());
  CHECK(empty.injections.empty());
}

TEST_CASE("copairing and images") {
  const Universe xy({"x", "y"});
  const std::vector<AbstractLogic> parts = {membership_logic(kA), membership_logic(xy)};
  const SumResult s = sum(parts);
  const std::vector<TotalMap> legs = {TotalMap(kA, kY, {0}), TotalMap(xy, kY, {0, 0})};
  const TotalMap h = copair(s, legs);
  CHECK(h.targets() == std::vector<std::size_t>{0, 0, 0});
  CHECK(classify_map(h, to_coalgebra(s.logic), to_coalgebra(membership_logic(kY))).open);

  const UCoalgebra alpha = to_coalgebra(a_entails_b());
  const auto image = homomorphic_image(TotalMap::identity(kAB), alpha);
  REQUIRE(image.has_value());
  CHECK(image->image == alpha);
  CHECK(image->corestriction.is_surjective());

  const UCoalgebra uneven(KleisliMorphism(kAB, kAB, {UpSet::top(kAB), eta(kAB)(1)}));
  const auto merged = homomorphic_image(TotalMap(kAB, kY, {0, 0}), uneven);
  CHECK_FALSE(merged.has_value());
  const auto same = homomorphic_image(TotalMap(kAB, kY, {0, 0}), UCoalgebra(eta(kAB)));
  REQUIRE(same.has_value());
  CHECK(same->image.structure() == eta(same->image.carrier()));
}
