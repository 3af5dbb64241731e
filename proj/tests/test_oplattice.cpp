#include <doctest.h>

#include <set>

#include "ordpart/fixtures.hpp"
#include "ordpart/oplattice.hpp"

using namespace ordpart;

TEST_CASE("node counts for the basic families") {
  CHECK(enumerate_oplattice(fixtures::antichain(4)).node_count() == 15);
  CHECK(enumerate_oplattice(fixtures::chain(4)).node_count() == 8);
  CHECK(enumerate_oplattice(fixtures::boolean_b2()).node_count() == 11);
}

TEST_CASE("antichain lattices are the full partition lattices") {
  const int bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_oplattice(fixtures::antichain(n)).node_count() == bell[n]);
  }
}

TEST_CASE("chain lattices are Boolean algebras") {
  for (int n = 2; n <= 6; ++n) {
    const OpLattice lat = enumerate_oplattice(fixtures::chain(n));
    CHECK(lat.node_count() == (1 << (n - 1)));
    CHECK(atoms(fixtures::chain(n)).size() ==
          static_cast<std::size_t>(n - 1));
    // Rank sizes are binomial coefficients.
    std::vector<int> rank_sizes(n, 0);
    for (int id = 0; id < lat.node_count(); ++id) ++rank_sizes[lat.rank_of(id)];
    int binom = 1;
    for (int r = 0; r < n; ++r) {
      CHECK(rank_sizes[r] == binom);
      binom = binom * (n - 1 - r) / (r + 1);
    }
  }
}

TEST_CASE("bottom and top sit at the ends") {
  const OpLattice lat = enumerate_oplattice(fixtures::boolean_b2());
  CHECK(lat.node(lat.bottom()) == Partition::singletons(4));
  CHECK(lat.node(lat.top()) == Partition::one_block(4));
  CHECK(lat.rank_of(lat.bottom()) == 0);
  CHECK(lat.rank_of(lat.top()) == 3);
}

TEST_CASE("meet examples on the 3-chain") {
  const Poset chain = fixtures::chain(3);
  const Partition left = Partition::from_blocks(3, {{0, 1}, {2}});
  const Partition right = Partition::from_blocks(3, {{0}, {1, 2}});
  CHECK(meet(chain, left, right) == Partition::singletons(3));
  CHECK(meet(chain, left, left) == left);
  CHECK(meet(chain, left, Partition::singletons(3)) ==
        Partition::singletons(3));
}

TEST_CASE("join examples on the 3-chain") {
  const Poset chain = fixtures::chain(3);
  const Partition left = Partition::from_blocks(3, {{0, 1}, {2}});
  const Partition right = Partition::from_blocks(3, {{0}, {1, 2}});
  CHECK(join(chain, left, right) == Partition::one_block(3));
  CHECK(join(chain, left, left) == left);
  CHECK(join(chain, left, Partition::one_block(3)) ==
        Partition::one_block(3));
}

TEST_CASE("meet and join reject non-congruences") {
  const Poset chain = fixtures::chain(3);
  const Partition bad = Partition::from_blocks(3, {{0, 2}, {1}});
  CHECK_THROWS_AS(meet(chain, bad, bad), NotACongruence);
  CHECK_THROWS_AS(join(chain, bad, Partition::singletons(3)),
                  NotACongruence);
}

TEST_CASE("cover characterization examples") {
  const Poset chain = fixtures::chain(3);
  CHECK(is_cover(chain, Partition::singletons(3),
                 Partition::from_blocks(3, {{0, 1}, {2}})));
  CHECK_FALSE(is_cover(chain, Partition::singletons(3),
                       Partition::singletons(3)));
  CHECK_FALSE(
      is_cover(chain, Partition::singletons(3), Partition::one_block(3)));
}

TEST_CASE("atom lists") {
  CHECK(atoms(fixtures::antichain(3)).size() == 3);
  CHECK(atoms(fixtures::chain(3)).size() == 2);
  // Four cover pairs plus the one incomparable pair.
  CHECK(atoms(fixtures::boolean_b2()).size() == 5);
}

TEST_CASE("atoms coincide with rank-1 nodes") {
  for (const auto& p : {fixtures::boolean_b2(), fixtures::antichain(4),
                        fixtures::two_two_chains()}) {
    const OpLattice lat = enumerate_oplattice(p);
    std::vector<Partition> rank1;
    for (int id = 0; id < lat.node_count(); ++id) {
      if (lat.rank_of(id) == 1) rank1.push_back(lat.node(id));
    }
    CHECK(atoms(p) == rank1);
  }
}

TEST_CASE("proper part sizes") {
  CHECK(enumerate_oplattice(fixtures::chain(3)).proper_part().size() == 2);
  CHECK(enumerate_oplattice(fixtures::antichain(3)).proper_part().size() == 3);
  CHECK(enumerate_oplattice(fixtures::boolean_b2()).proper_part().size() == 9);
  CHECK(enumerate_oplattice(fixtures::chain(1)).proper_part().empty());
  CHECK(enumerate_oplattice(fixtures::chain(2)).proper_part().empty());
}

TEST_CASE("cover edges match the order-theoretic covering relation") {
  for (const auto& p : {fixtures::boolean_b2(), fixtures::chain(4),
                        fixtures::antichain(4)}) {
    const OpLattice lat = enumerate_oplattice(p);
    std::set<std::pair<int, int>> edges(lat.cover_edges().begin(),
                                        lat.cover_edges().end());
    for (int i = 0; i < lat.node_count(); ++i) {
      for (int j = 0; j < lat.node_count(); ++j) {
        if (i == j) continue;
        bool cover = lat.node_leq(i, j);
        if (cover) {
          for (int k = 0; k < lat.node_count() && cover; ++k) {
            if (k != i && k != j && lat.node_leq(i, k) && lat.node_leq(k, j)) {
              cover = false;
            }
          }
        }
        CHECK(cover == (edges.count({i, j}) > 0));
        if (cover) {
          CHECK(lat.rank_of(j) == lat.rank_of(i) + 1);
          CHECK(is_cover(p, lat.node(i), lat.node(j)));
        }
      }
    }
  }
}

TEST_CASE("the B2 lattice is not semimodular") {
  // Recorded observation: some pair violates r(x)+r(y) >= r(meet)+r(join).
  const Poset p = fixtures::boolean_b2();
  const OpLattice lat = enumerate_oplattice(p);
  bool violated = false;
  for (int i = 0; i < lat.node_count() && !violated; ++i) {
    for (int j = 0; j < lat.node_count() && !violated; ++j) {
      const int m = lat.require_index(meet(p, lat.node(i), lat.node(j)));
      const int u = lat.require_index(join(p, lat.node(i), lat.node(j)));
      if (lat.rank_of(i) + lat.rank_of(j) <
          lat.rank_of(m) + lat.rank_of(u)) {
        violated = true;
      }
    }
  }
  CHECK(violated);
}

TEST_CASE("index lookups") {
  const OpLattice lat = enumerate_oplattice(fixtures::chain(3));
  CHECK(lat.index_of(Partition::singletons(3)) == 0);
  CHECK(lat.index_of(Partition::from_blocks(3, {{0, 2}, {1}})) == -1);
  CHECK_THROWS_AS(lat.require_index(Partition::from_blocks(3, {{0, 2}, {1}})),
                  NotACongruence);
}
