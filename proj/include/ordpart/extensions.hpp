#ifndef ORDPART_EXTENSIONS_HPP
#define ORDPART_EXTENSIONS_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordpart/bigint.hpp"
#include "ordpart/congruence.hpp"
#include "ordpart/poset.hpp"

namespace ordpart {

class NotMinimal : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Order-preserving bijection onto {0..n-1}, kept with its inverse.
struct LinearExtension {
  std::vector<int> rank;  // rank[x] = f(x)
  std::vector<int> elem;  // elem[r] = f^{-1}(r)

  LinearExtension() = default;
  explicit LinearExtension(std::vector<int> f);

  int size() const { return static_cast<int>(rank.size()); }

  friend bool operator==(const LinearExtension&,
                         const LinearExtension&) = default;
};

bool is_linear_extension(const Poset& p, const std::vector<int>& rank);

/// All linear extensions, duplicate-free, sorted lexicographically by rank
/// array. e(P) is the length of the result.
std::vector<LinearExtension> linear_extensions(const Poset& p);

/// Count without storing; same backtracking order as linear_extensions.
BigInt count_linear_extensions(const Poset& p);

/// x oplus_f k = f^{-1}(f(x) + k mod n)
int oplus(const LinearExtension& f, int x, int k);

/// Successor array x -> x oplus_f 1; the cycle digraph of the action.
std::vector<int> action_cycle(const LinearExtension& f);

/// g shifted by k when the shift is again a linear extension. The validity
/// test is the per-component condition: g(x)+k >= n constant on components.
std::optional<LinearExtension> shift_extension(const Poset& p,
                                               const LinearExtension& g,
                                               int k);

/// Extensions sharing one cyclic action; members sorted, classes sorted by
/// their lexicographically smallest member.
struct CyclicClass {
  std::vector<int> cycle;
  std::vector<LinearExtension> members;
};

std::vector<CyclicClass> cyclic_classes(const Poset& p);

/// Contract the edge (a, a oplus_f 1) of the action cycle: returns the atom
/// partition pi_{a, a oplus_f 1} and the induced extension of the quotient.
std::pair<Partition, LinearExtension> contract(const Poset& p,
                                               const LinearExtension& f,
                                               int a);

/// Inverse direction: given a minimal a, a partner b with pi_{a,b}
/// order-preserving, and an extension g of the quotient, build the unique f
/// with a oplus_f 1 = b and contract(p, f, a) = (pi_{a,b}, g).
LinearExtension expand(const Poset& p, int a, int b,
                       const LinearExtension& g);

}  // namespace ordpart

#endif
