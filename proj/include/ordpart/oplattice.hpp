#ifndef ORDPART_OPLATTICE_HPP
#define ORDPART_OPLATTICE_HPP

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordpart/congruence.hpp"
#include "ordpart/poset.hpp"

namespace ordpart {

/// The lattice of all order-preserving partitions of a fixed poset under
/// refinement. Node 0 is the all-singletons bottom; the last node is the
/// one-block top. Node ids sort by (rank, restricted-growth string).
class OpLattice {
 public:
  const Poset& base() const { return base_; }
  const std::vector<Partition>& nodes() const { return nodes_; }
  const Partition& node(int id) const { return nodes_[id]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  int index_of(const Partition& pi) const;  // -1 when absent
  int require_index(const Partition& pi) const;

  // rank = |P| - |pi|
  int rank_of(int id) const {
    return base_.size() - nodes_[id].block_count();
  }
  int bottom() const { return 0; }
  int top() const { return node_count() - 1; }

  // Refinement order between nodes.
  bool node_leq(int i, int j) const {
    return leq_.get(i, j);
  }

  const std::vector<std::pair<int, int>>& cover_edges() const {
    return cover_edges_;
  }

  // All nodes except bottom and top.
  std::vector<int> proper_part() const;

  friend OpLattice enumerate_oplattice(const Poset& p);

 private:
  Poset base_;
  std::vector<Partition> nodes_;
  std::unordered_map<Partition, int, PartitionHash> index_;
  std::vector<std::pair<int, int>> cover_edges_;  // (finer, coarser)
  BitRelation leq_;                               // node-level refinement
};

/// Enumerate order-preserving partitions by filtering all restricted-growth
/// strings through the congruence test.
OpLattice enumerate_oplattice(const Poset& p);

/// Blockwise intersection; the greatest lower bound in the lattice.
Partition meet(const Poset& p, const Partition& a, const Partition& b);

/// Mutual-reachability classes of the transitive closure of
/// (leq union rho_a union rho_b); the least upper bound.
Partition join(const Poset& p, const Partition& a, const Partition& b);

/// Merge characterization of covers: coarser arises from finer by merging
/// two blocks that are covering or incomparable in the quotient.
bool is_cover(const Poset& p, const Partition& finer,
              const Partition& coarser);

/// All atoms pi_{a,b} with a covered by b or a incomparable to b.
std::vector<Partition> atoms(const Poset& p);

}  // namespace ordpart

#endif
