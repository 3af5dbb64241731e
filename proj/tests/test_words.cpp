#include <doctest.h>

#include <algorithm>

#include "ordpart/extensions.hpp"
#include "ordpart/fixtures.hpp"
#include "ordpart/words.hpp"

using namespace ordpart;

namespace {

PWord word(const char* digits) {
  PWord w;
  for (const char* c = digits; *c; ++c) w.letters.push_back(*c - '0');
  return w;
}

}  // namespace

TEST_CASE("multinomial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 7) == 0);
  CHECK(multinomial(4, {2, 2}) == 6);
  CHECK(multinomial(9, {2, 3, 4}) == 1260);
  CHECK_THROWS_AS(multinomial(5, {2, 2}), TotalMismatch);
}

TEST_CASE("composition plumbing") {
  const Composition c({2, 3, 4});
  CHECK(c.total() == 9);
  CHECK(c.rank() == 6);
  CHECK(c.cuts() == std::vector<int>{2, 5});
  CHECK(Composition::from_cuts(9, {2, 5}) == c);
  CHECK_THROWS_AS(Composition({2, 0, 1}), TotalMismatch);
}

TEST_CASE("words of extensions") {
  const Poset connected = fixtures::boolean_b2();
  for (const auto& f : linear_extensions(connected)) {
    CHECK(pword_of(connected, f).letters == std::vector<int>{1, 1, 1, 1});
  }

  const Poset discon = fixtures::chain_plus_point();
  const LinearExtension stacked(std::vector<int>{0, 1, 2});
  CHECK(pword_of(discon, stacked).letters == std::vector<int>{1, 1, 2});

  const Poset a3 = fixtures::antichain(3);
  for (const auto& f : linear_extensions(a3)) {
    auto letters = pword_of(a3, f).letters;
    std::sort(letters.begin(), letters.end());
    CHECK(letters == std::vector<int>{1, 2, 3});
  }
}

TEST_CASE("finest detanglements of the worked words") {
  CHECK(finest_detanglement(word("112223333")) == Composition({2, 3, 4}));
  CHECK(finest_detanglement(word("122123333")) == Composition({5, 4}));
  CHECK(finest_detanglement(word("221231333")) == Composition({9}));
  CHECK(detanglement_index(word("112223333")) == 3);
  CHECK(detanglement_index(word("122123333")) == 2);
  CHECK(detanglement_index(word("221231333")) == 1);
}

TEST_CASE("single-letter words are entangled") {
  CHECK(detanglement_index(word("1111")) == 1);
  CHECK(detanglement_index(word("1")) == 1);
}

TEST_CASE("detanglement membership") {
  const PWord w = word("112223333");
  CHECK(is_detanglement(w, Composition({9})));
  CHECK(is_detanglement(w, Composition({2, 7})));
  CHECK(is_detanglement(w, Composition({5, 4})));
  CHECK(is_detanglement(w, Composition({2, 3, 4})));
  CHECK_FALSE(is_detanglement(w, Composition({3, 6})));
  CHECK_THROWS_AS(is_detanglement(w, Composition({3, 3})), TotalMismatch);
}

TEST_CASE("composition refinement") {
  const Composition ones({1, 1, 1, 1, 1, 1, 1, 1, 1});
  const Composition top({9});
  const Composition mid({2, 3, 4});
  CHECK(refines(ones, mid));
  CHECK(refines(ones, top));
  CHECK(refines(mid, top));
  CHECK(refines(mid, Composition({5, 4})));
  CHECK(refines(mid, Composition({2, 7})));
  CHECK_FALSE(refines(Composition({5, 4}), Composition({2, 7})));
  CHECK_FALSE(refines(Composition({2, 7}), Composition({5, 4})));
  CHECK_THROWS_AS(refines(top, Composition({3, 3})), TotalMismatch);
}

TEST_CASE("all compositions of m") {
  CHECK(all_compositions(4).size() == 8);
  CHECK(all_compositions(1).size() == 1);
}

TEST_CASE("detangled word counts") {
  CHECK(count_detangled(3, 1, Composition({3})) == 6);  // all distinct words
  CHECK(count_detangled(2, 2, Composition({2})) == 6);
  CHECK(count_detangled(2, 2, Composition({1, 1})) == 2);
  CHECK_THROWS_AS(count_detangled(3, 1, Composition({2})), TotalMismatch);
}

TEST_CASE("entangled word counts") {
  CHECK(count_exact(2, 2, Composition({2})) == 4);
  CHECK(count_exact(3, 3, Composition({3})) == 1566);
  CHECK(count_exact(2, 1, Composition({2})) == 0);
}

TEST_CASE("larger entangled counts stay exact") {
  CHECK(count_exact(5, 2, Composition({5})) == BigInt("84720"));
  CHECK(count_exact(6, 3, Composition({6})) == BigInt("134973740880"));
  CHECK(count_exact(8, 4, Composition({8})) ==
        BigInt("2389384600126093124110080"));
}

TEST_CASE("count partition identity") {
  for (int m = 1; m <= 5; ++m) {
    for (int s = 1; s <= 3; ++s) {
      BigInt sum = 0;
      for (const Composition& L : all_compositions(m)) {
        sum += count_exact(m, s, L);
        CHECK(count_detangled(m, s, L) == [&] {
          BigInt inner = 0;
          for (const Composition& finer : all_compositions(m)) {
            if (refines(finer, L)) inner += count_exact(m, s, finer);
          }
          return inner;
        }());
      }
      CHECK(sum == count_detangled(m, s, Composition({m})));
    }
  }
}

TEST_CASE("U counts for two disjoint 2-chains") {
  const Poset p = fixtures::two_two_chains();
  CHECK(count_U(p, 1) == 4);
  CHECK(count_U(p, 2) == 2);
  CHECK(count_U(p, 3) == 0);
}

TEST_CASE("U counts for connected posets") {
  const Poset p = fixtures::boolean_b2();
  CHECK(count_U(p, 1) == 1);
  CHECK(count_U(p, 2) == 0);
}

TEST_CASE("U sums to the multinomial") {
  for (const auto& p :
       {fixtures::two_two_chains(), fixtures::chain_plus_point(),
        fixtures::antichain(4)}) {
    const auto comps = p.connected_components();
    std::vector<int> sizes;
    for (const auto& c : comps) sizes.push_back(static_cast<int>(c.size()));
    BigInt sum = 0;
    for (int t = 1; t <= static_cast<int>(comps.size()); ++t) {
      sum += count_U(p, t);
    }
    CHECK(sum == multinomial(p.size(), sizes));
  }
}

TEST_CASE("formula and enumeration agree on equal components") {
  const Poset p = fixtures::two_two_chains();
  for (int t = 1; t <= 2; ++t) {
    CHECK(count_U_by_formula(2, 2, t) == count_U_by_enumeration(p, t));
  }
  const Poset a4 = fixtures::antichain(4);
  for (int t = 1; t <= 4; ++t) {
    CHECK(count_U_by_formula(4, 1, t) == count_U_by_enumeration(a4, t));
  }
}

TEST_CASE("extension counts by components") {
  CHECK(e_by_components(fixtures::boolean_b2()) == 2);
  CHECK(e_by_components(fixtures::chain_plus_point()) == 3);
  CHECK(e_by_components(fixtures::two_two_chains()) == 6);
}

TEST_CASE("cyclic counts by words") {
  CHECK(e_C_by_words(fixtures::boolean_b2()) == 2);
  CHECK(e_C_by_words(fixtures::chain_plus_point()) == 2);
  CHECK(e_C_by_words(fixtures::two_two_chains()) == 5);
  CHECK(e_C_by_words(fixtures::antichain(4)) == 6);
}

TEST_CASE("word-based counts match enumeration on mixed components") {
  const Poset p =
      Poset::from_covers(CoverList{6, {{0, 1}, {1, 2}, {3, 4}}});  // C3 + C2 + pt
  CHECK(e_by_components(p) == count_linear_extensions(p));
  CHECK(e_C_by_words(p) == BigInt(cyclic_classes(p).size()));
}
