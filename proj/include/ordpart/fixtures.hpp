#ifndef ORDPART_FIXTURES_HPP
#define ORDPART_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "ordpart/poset.hpp"

namespace ordpart::fixtures {

Poset chain(int n);
Poset antichain(int n);

/// Boolean algebra with two atoms: 0 < 1,2 < 3.
Poset boolean_b2();

/// Disjoint sum of a 2-chain and a point (3 linear extensions, 2 cyclic).
Poset chain_plus_point();

/// Two disjoint 2-chains.
Poset two_two_chains();

/// 6-element poset v,u,x,w,y,z with u minimal and u covered by x; the
/// identity ranks form a linear extension whose contraction at u merges
/// {u,x} and lands on block ranks 0..4.
Poset six_contract_example();

/// All five shapes of 3-element posets, with names.
std::vector<std::pair<std::string, Poset>> three_element_posets();

}  // namespace ordpart::fixtures

#endif
