#include <doctest.h>

#include "ulog/powerset.hpp"

using namespace ulog;

TEST_CASE("lifting the identity is reverse inclusion") {
  const Universe x = Universe::standard(2);
  const Relation l = lift(Relation::identity(x));
  for (Mask a = 0; a < 4; ++a) {
    for (Mask b = 0; b < 4; ++b) CHECK(l.relates(a, b) == is_submask(b, a));
  }
}

TEST_CASE("lifting the full relation") {
  const Universe x = Universe::standard(2);
  const Relation l = lift(Relation::full(x, x));
  for (Mask b = 0; b < 4; ++b) CHECK(l.relates(0, b) == (b == 0));
  for (Mask a = 1; a < 4; ++a) {
    for (Mask b = 0; b < 4; ++b) CHECK(l.relates(a, b));
  }
}

TEST_CASE("lifting matches the quantifier reading") {
  for (std::size_t n = 0; n <= 2; ++n) {
    const Universe x = Universe::standard(n);
    for (const auto& r : enumerate_relations(x, x)) {
      const Relation l = lift(r);
      for (Mask a = 0; a < x.subset_count(); ++a) {
        for (Mask b = 0; b < x.subset_count(); ++b) {
          bool expect = true;
          for (std::size_t y = 0; y < n; ++y) {
            if (((b >> y) & 1U) == 0) continue;
            bool found = false;
            for (std::size_t i = 0; i < n; ++i) found = found || (((a >> i) & 1U) != 0 && r.relates(i, y));
            expect = expect && found;
          }
          CHECK(l.relates(a, b) == expect);
        }
      }
    }
  }
}

TEST_CASE("direct image, unit and multiplication") {
  const Universe ab = Universe::standard(2), y = Universe({"y"});
  const TotalMap pf = direct_image_map(TotalMap(ab, y, {0, 0}));
  CHECK(pf(3) == 1);
  CHECK(pf(0) == 0);
  CHECK(pf.domain() == powerset_universe(ab));

  const TotalMap e = unit_map(ab);
  CHECK(e(0) == 1);
  CHECK(e(1) == 2);

  const TotalMap m = multiplication_map(ab);
  CHECK(m.domain().size() == 16);
  // {{a},{b}} has pattern bit1 | bit2
  CHECK(m(0b0110) == 3);
  CHECK(m(0) == 0);
  CHECK(m(1) == 0);
  CHECK_THROWS_AS(multiplication_map(Universe::standard(4)), CapExceeded);
}

TEST_CASE("monad laws hold on the tables at size 2") {
  const Universe x = Universe::standard(2);
  const Universe px = powerset_universe(x);
  const TotalMap m = multiplication_map(x);
  CHECK(compose(m, unit_map(px)) == TotalMap::identity(px));
  CHECK(compose(m, direct_image_map(unit_map(x))) == TotalMap::identity(px));
}
