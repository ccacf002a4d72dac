#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "ulog/enumerate.hpp"

using namespace ulog;

TEST_CASE("logic counts agree with the Moore family oracle") {
  const std::vector<std::size_t> expected = {1, 2, 7, 61, 2480};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(oracle::count_moore_families(n) == expected[n]);
    const Universe x = Universe::standard(n);
    CHECK(enumerate_closure_operators(x).size() == expected[n]);
    if (n <= 3) CHECK(enumerate_logics_via_closed_sets(x).size() == expected[n]);
  }
  CHECK_THROWS_AS(enumerate_logics(Universe::standard(5)), CapExceeded);
}

TEST_CASE("both routes give the same logics") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const Universe x = Universe::standard(n);
    auto a = enumerate_logics(x);
    auto b = enumerate_logics_via_closed_sets(x);
    auto key = [](const AbstractLogic& l) { return l.closure_table(); };
    std::set<std::vector<Mask>> ka, kb;
    for (const auto& l : a) ka.insert(key(l));
    for (const auto& l : b) kb.insert(key(l));
    CHECK(ka == kb);
    CHECK(ka.size() == a.size());
  }
}

TEST_CASE("logics on two points match the brute-force relation scan") {
  std::set<std::vector<Mask>> expected;
  for (const auto& rel : oracle::consequence_relations(2)) expected.insert(std::vector<Mask>(rel.begin(), rel.end()));
  std::set<std::vector<Mask>> got;
  for (const auto& l : enumerate_logics(Universe::standard(2))) got.insert(l.closure_table());
  CHECK(got == expected);
}

TEST_CASE("closure operators come out in ascending table order") {
  const auto ops = enumerate_closure_operators(Universe::standard(3));
  for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
    CHECK(std::lexicographical_compare(ops[i].map().table().begin(), ops[i].map().table().end(),
                                       ops[i + 1].map().table().begin(), ops[i + 1].map().table().end()));
  }
  CHECK(ops.front() == ClosureOperator::identity(Universe::standard(3)));
}

TEST_CASE("up-set counts") {
  const std::vector<std::size_t> expected = {2, 3, 6, 20, 168, 7581};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(count_upsets(n) == expected[n]);
}
