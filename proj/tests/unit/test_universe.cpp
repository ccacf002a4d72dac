#include <doctest.h>

#include "ulog/universe.hpp"

using namespace ulog;

TEST_CASE("powerset universe sizes and order") {
  CHECK(powerset_universe(Universe::standard(0)).size() == 1);
  const Universe p2 = powerset_universe(Universe::standard(2));
  CHECK(p2.labels() == std::vector<std::string>{"{}", "{a}", "{b}", "{a,b}"});
  CHECK(powerset_universe(Universe::standard(3)).size() == 8);
  CHECK(*p2.powerset_base() == Universe::standard(2));
}

TEST_CASE("declared carriers reject duplicates and oversize") {
  CHECK_THROWS_AS(Universe({"a", "a"}), Error);
  CHECK_THROWS_AS(Universe(std::vector<std::string>(13, "x")), CapExceeded);
  std::vector<std::string> twelve;
  for (int i = 0; i < 12; ++i) twelve.push_back("e" + std::to_string(i));
  CHECK(Universe(twelve).subset_count() == 4096);
}

TEST_CASE("labels and lookup") {
  const Universe x({"p", "q"});
  CHECK(x.index_of("q") == 1);
  CHECK_FALSE(x.index_of("r").has_value());
  CHECK(x.format_mask(0) == "{}");
  CHECK(x.format_mask(3) == "{p,q}");
  CHECK(x.full_mask() == 3);
  CHECK_FALSE(x == Universe::standard(2));
}

TEST_CASE("subsets") {
  const Universe x = Universe::standard(2);
  const Subset a = Subset::of(x, {0});
  const Subset ab = Subset::full(x);
  CHECK(is_subset_of(a, ab));
  CHECK(complement(a) == Subset::of(x, {1}));
  CHECK((a | complement(a)) == ab);
  CHECK((a & complement(a)).empty());
  CHECK(ab.mask() == 3);
  CHECK(ab.to_string() == "{a,b}");

  const auto one = enumerate_subsets(Universe::standard(1));
  REQUIRE(one.size() == 2);
  CHECK(one[0].empty());
  CHECK(one[1].contains(0));
  const auto two = enumerate_subsets(x);
  REQUIRE(two.size() == 4);
  CHECK(two[1] == a);
  CHECK(two[2] == Subset::of(x, {1}));
  CHECK(enumerate_subsets(Universe::standard(3)).size() == 8);
  CHECK_THROWS_AS(Subset::of(x, {0}) | Subset::of(Universe({"p", "q"}), {0}), UniverseMismatch);
}

TEST_CASE("submask walk visits every submask once") {
  std::vector<Mask> seen;
  for_each_submask(0b101, [&](Mask s) { seen.push_back(s); });
  CHECK(seen == std::vector<Mask>{0b101, 0b100, 0b001, 0});
}

TEST_CASE("total maps") {
  const Universe x = Universe::standard(2), y = Universe({"y"});
  const TotalMap f(x, y, {0, 0});
  CHECK_FALSE(f.is_injective());
  CHECK(f.is_surjective());
  CHECK(f.image(0b11) == 1);
  CHECK(f.image(0) == 0);
  CHECK(f.preimage(1) == 0b11);
  CHECK(f.encode() == "[0,0]");
  CHECK_THROWS(TotalMap(x, y, {0, 1}));
  CHECK(compose(f, TotalMap::identity(x)) == f);
  CHECK(enumerate_maps(Universe::standard(3), x).size() == 8);
  CHECK(enumerate_maps(Universe::standard(0), x).size() == 1);
  CHECK(enumerate_maps(x, Universe::standard(0)).empty());
  const auto maps = enumerate_maps(x, x);
  CHECK(maps[1].targets() == std::vector<std::size_t>{1, 0});
}
