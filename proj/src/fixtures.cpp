#include "ordpart/fixtures.hpp"

namespace ordpart::fixtures {

Poset chain(int n) {
  CoverList c;
  c.n = n;
  for (int i = 0; i + 1 < n; ++i) c.covers.emplace_back(i, i + 1);
  return Poset::from_covers(c);
}

Poset antichain(int n) {
  return Poset::from_covers(CoverList{n, {}});
}

Poset boolean_b2() {
  return Poset::from_covers(CoverList{4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}});
}

Poset chain_plus_point() {
  return Poset::from_covers(CoverList{3, {{0, 1}}});
}

Poset two_two_chains() {
  return Poset::from_covers(CoverList{4, {{0, 1}, {2, 3}}});
}

Poset six_contract_example() {
  // 0=v, 1=u, 2=x, 3=w, 4=y, 5=z
  return Poset::from_covers(
      CoverList{6, {{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}},
      {"v", "u", "x", "w", "y", "z"});
}

std::vector<std::pair<std::string, Poset>> three_element_posets() {
  return {
      {"antichain", antichain(3)},
      {"chain_plus_point", chain_plus_point()},
      {"vee", Poset::from_covers(CoverList{3, {{0, 2}, {1, 2}}})},
      {"wedge", Poset::from_covers(CoverList{3, {{0, 1}, {0, 2}}})},
      {"chain", chain(3)},
  };
}

}  // namespace ordpart::fixtures
