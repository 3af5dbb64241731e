#ifndef ORDPART_SNF_HPP
#define ORDPART_SNF_HPP

#include <tuple>
#include <vector>

#include "ordpart/bigint.hpp"

namespace ordpart {

/// Integer matrix given by a coordinate list; duplicates are summed.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::tuple<int, int, long long>> entries;

  void add(int r, int c, long long v) { entries.emplace_back(r, c, v); }
};

/// Rank and invariant factors (divisibility chain, nonzero entries only).
struct SmithResult {
  int rank = 0;
  std::vector<BigInt> invariant_factors;

  std::vector<BigInt> nontrivial_factors() const;
};

/// Sparse elimination with pivoting by smallest absolute value (unit pivots
/// preferred), finished by gcd/lcm normalization of the diagonal.
SmithResult smith_normal_form(const SparseIntMatrix& m);

}  // namespace ordpart

#endif
