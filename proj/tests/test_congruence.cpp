#include <doctest.h>

#include "ordpart/congruence.hpp"
#include "ordpart/fixtures.hpp"

using namespace ordpart;

TEST_CASE("partition canonical form") {
  const Partition pi = Partition::from_blocks(4, {{3, 1}, {2}, {0}});
  CHECK(pi.blocks() == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
  CHECK(pi.block_of(3) == 1);
  CHECK(pi.rgs() == std::vector<int>{0, 1, 2, 1});

  CHECK(Partition::singletons(3).block_count() == 3);
  CHECK(Partition::one_block(3).block_count() == 1);
  CHECK(Partition::merge_pair(4, 2, 0).blocks() ==
        std::vector<std::vector<int>>{{0, 2}, {1}, {3}});
}

TEST_CASE("partition validation errors") {
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), PartitionError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}),
                  PartitionError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1, 2}, {}}), PartitionError);
  CHECK_THROWS_AS(Partition::from_blocks(2, {{0, 3}}), PartitionError);
  CHECK_THROWS_AS(Partition::merge_pair(3, 1, 1), PartitionError);
}

TEST_CASE("refinement of partitions") {
  const Partition fine = Partition::singletons(3);
  const Partition mid = Partition::from_blocks(3, {{0, 1}, {2}});
  const Partition top = Partition::one_block(3);
  CHECK(fine.refines(mid));
  CHECK(mid.refines(top));
  CHECK_FALSE(top.refines(mid));
  CHECK(mid.refines(mid));
  CHECK_THROWS_AS(fine.refines(Partition::singletons(4)), SizeMismatch);
}

TEST_CASE("trivial partitions are congruences") {
  for (const auto& p :
       {fixtures::chain(4), fixtures::boolean_b2(), fixtures::antichain(4)}) {
    CHECK(is_order_congruence(p, Partition::singletons(p.size())));
    CHECK(is_order_congruence(p, Partition::one_block(p.size())));
  }
}

TEST_CASE("chain with a gap block is not a congruence") {
  const Poset chain = fixtures::chain(3);
  const Partition gap = Partition::from_blocks(3, {{0, 2}, {1}});
  CHECK_FALSE(is_order_congruence(chain, gap));
  CHECK_FALSE(is_order_congruence_by_circles(chain, gap));

  const Partition interval = Partition::from_blocks(3, {{0, 1}, {2}});
  CHECK(is_order_congruence(chain, interval));
  CHECK(is_order_congruence_by_circles(chain, interval));
}

TEST_CASE("every partition of an antichain is order-preserving") {
  const Poset p = fixtures::antichain(3);
  for (const Partition& pi : all_set_partitions(3)) {
    CHECK(is_order_congruence(p, pi));
    CHECK(is_order_congruence_by_circles(p, pi));
  }
}

TEST_CASE("the two congruence routes agree exhaustively") {
  std::vector<Poset> catalog{fixtures::chain(4), fixtures::antichain(4),
                             fixtures::boolean_b2(),
                             fixtures::chain_plus_point()};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    catalog.push_back(random_poset(4, 0.5, seed));
  }
  for (const Poset& p : catalog) {
    for (const Partition& pi : all_set_partitions(p.size())) {
      CHECK(is_order_congruence(p, pi) ==
            is_order_congruence_by_circles(p, pi));
    }
  }
}

TEST_CASE("size mismatch is reported") {
  CHECK_THROWS_AS(
      is_order_congruence(fixtures::chain(3), Partition::singletons(4)),
      SizeMismatch);
  CHECK_THROWS_AS(is_order_congruence_by_circles(fixtures::chain(3),
                                                 Partition::singletons(4)),
                  SizeMismatch);
}

TEST_CASE("quotient by singletons is the poset itself") {
  const Poset p = fixtures::boolean_b2();
  const Poset q = quotient_poset(p, Partition::singletons(4));
  CHECK(q.relation() == p.relation());
}

TEST_CASE("quotient by the one-block partition is a point") {
  const Poset q =
      quotient_poset(fixtures::boolean_b2(), Partition::one_block(4));
  CHECK(q.size() == 1);
}

TEST_CASE("contracting an interval of a chain gives a shorter chain") {
  const Poset q = quotient_poset(fixtures::chain(4),
                                 Partition::from_blocks(4, {{0, 1}, {2}, {3}}));
  CHECK(q.size() == 3);
  CHECK(q.leq(0, 1));
  CHECK(q.leq(1, 2));
  CHECK(q.leq(0, 2));
  CHECK_FALSE(q.leq(2, 0));
}

TEST_CASE("quotient refuses non-congruences") {
  CHECK_THROWS_AS(quotient_poset(fixtures::chain(3),
                                 Partition::from_blocks(3, {{0, 2}, {1}})),
                  NotACongruence);
}

TEST_CASE("order convexity") {
  const Poset chain = fixtures::chain(3);
  CHECK(is_order_convex(chain, {1}));
  CHECK(is_order_convex(chain, {0, 1}));
  CHECK_FALSE(is_order_convex(chain, {0, 2}));
}

TEST_CASE("blocks of accepted partitions are order-convex") {
  const Poset p = fixtures::boolean_b2();
  for (const Partition& pi : all_set_partitions(4)) {
    if (!is_order_congruence(p, pi)) continue;
    for (const auto& block : pi.blocks()) {
      CHECK(is_order_convex(p, block));
    }
  }
}

TEST_CASE("quasiorder construction validates") {
  BitRelation r(2);
  r.set(0, 0);
  r.set(1, 1);
  CHECK_NOTHROW((void)Quasiorder{r});
  BitRelation bad(3);
  bad.set(0, 0);
  bad.set(1, 1);
  bad.set(2, 2);
  bad.set(0, 1);
  bad.set(1, 2);  // missing (0,2)
  CHECK_THROWS_AS((void)Quasiorder{bad}, AxiomError);
}

TEST_CASE("minimal quasiorder symmetric core recovers the congruence") {
  const Poset p = fixtures::chain_plus_point();
  const Partition pi = Partition::from_blocks(3, {{0, 2}, {1}});
  REQUIRE(is_order_congruence(p, pi));
  const Quasiorder theta = minimal_quasiorder(p, pi);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      CHECK((theta.related(x, y) && theta.related(y, x)) ==
            pi.same_block(x, y));
    }
  }
}

TEST_CASE("set partition counts are the Bell numbers") {
  const int bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) {
    CHECK(all_set_partitions(n).size() == static_cast<std::size_t>(bell[n]));
  }
}
