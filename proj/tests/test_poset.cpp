#include <doctest.h>

#include <algorithm>

#include "ordpart/fixtures.hpp"
#include "ordpart/poset.hpp"

using namespace ordpart;

TEST_CASE("transitive closure of a chain") {
  const Poset p = Poset::from_covers(CoverList{3, {{0, 1}, {1, 2}}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(0, 0));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.covers(0, 1));
  CHECK_FALSE(p.covers(0, 2));
}

TEST_CASE("empty cover list gives an antichain") {
  const Poset p = Poset::from_covers(CoverList{3, {}});
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      CHECK(p.leq(x, y) == (x == y));
    }
  }
}

TEST_CASE("boolean algebra with two atoms") {
  const Poset p = fixtures::boolean_b2();
  CHECK(p.leq(0, 3));
  CHECK(p.incomparable(1, 2));
  CHECK(p.minimal_elements() == std::vector<int>{0});
  CHECK(p.maximal_elements() == std::vector<int>{3});
  CHECK(p.connected());
}

TEST_CASE("cover input errors") {
  CHECK_THROWS_AS(Poset::from_covers(CoverList{2, {{0, 1}, {1, 0}}}),
                  CycleError);
  CHECK_THROWS_AS(Poset::from_covers(CoverList{2, {{1, 1}}}), CycleError);
  CHECK_THROWS_AS(Poset::from_covers(CoverList{2, {{0, 2}}}), IndexError);
  CHECK_THROWS_AS(Poset::from_covers(CoverList{2, {{-1, 0}}}), IndexError);
}

TEST_CASE("relation validation") {
  BitRelation r(2);
  r.set(0, 0);
  r.set(1, 1);
  r.set(0, 1);
  r.set(1, 0);
  CHECK_THROWS_AS(Poset::from_relation(r), AxiomError);

  BitRelation missing_reflexive(2);
  missing_reflexive.set(0, 0);
  CHECK_THROWS_AS(Poset::from_relation(missing_reflexive), AxiomError);
}

TEST_CASE("non-reduced cover input is reduced") {
  const Poset p = Poset::from_covers(CoverList{3, {{0, 1}, {1, 2}, {0, 2}}});
  const std::vector<std::pair<int, int>> reduced{{0, 1}, {1, 2}};
  CHECK(p.cover_pairs() == reduced);
}

TEST_CASE("cover roundtrip on reduced lists") {
  const Poset p = fixtures::boolean_b2();
  const Poset rebuilt = Poset::from_covers(CoverList{4, p.cover_pairs()});
  CHECK(rebuilt.relation() == p.relation());
}

TEST_CASE("minimal elements") {
  CHECK(fixtures::chain(3).minimal_elements() == std::vector<int>{0});
  CHECK(fixtures::antichain(3).minimal_elements() ==
        std::vector<int>{0, 1, 2});
}

TEST_CASE("connected components") {
  CHECK(fixtures::chain(3).connected_components() ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(fixtures::chain_plus_point().connected_components() ==
        std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(fixtures::antichain(4).connected_components().size() == 4);
  CHECK_FALSE(fixtures::chain_plus_point().connected());
}

TEST_CASE("random posets are deterministic and respect density extremes") {
  const Poset one = random_poset(1, 0.5, 3);
  CHECK(one.size() == 1);

  const Poset empty = random_poset(5, 0.0, 7);
  CHECK(empty.cover_pairs().empty());

  const Poset full = random_poset(5, 1.0, 7);
  int comparable_pairs = 0;
  for (int x = 0; x < 5; ++x) {
    for (int y = x + 1; y < 5; ++y) {
      if (full.comparable(x, y)) ++comparable_pairs;
    }
  }
  CHECK(comparable_pairs == 10);  // a chain

  const Poset a = random_poset(6, 0.4, 42);
  const Poset b = random_poset(6, 0.4, 42);
  CHECK(a.relation() == b.relation());
}

TEST_CASE("random posets satisfy the order axioms") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Poset p = random_poset(6, 0.5, seed);
    CHECK(p.relation().is_reflexive());
    CHECK(p.relation().is_antisymmetric());
    CHECK(p.relation().is_transitive());
  }
}

TEST_CASE("induced subposet keeps the order") {
  const Poset p = fixtures::boolean_b2();
  const Poset sub = induced_subposet(p, {0, 1, 3});
  CHECK(sub.size() == 3);
  CHECK(sub.leq(0, 2));  // 0 <= 3 in the original
  CHECK(sub.leq(0, 1));
  CHECK(sub.covers(1, 2));
}

TEST_CASE("names pass through") {
  const Poset p = fixtures::six_contract_example();
  CHECK(p.name_of(0) == "v");
  CHECK(p.name_of(5) == "z");
  CHECK(fixtures::chain(2).name_of(1) == "1");
}
