#ifndef ORDPART_CONGRUENCE_HPP
#define ORDPART_CONGRUENCE_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ordpart/poset.hpp"

namespace ordpart {

class SizeMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NotACongruence : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class PartitionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Set partition of {0..n-1} in canonical form: blocks sorted by smallest
/// member, members ascending. Identity, ordering and hashing all go through
/// the restricted-growth string.
class Partition {
 public:
  Partition() = default;

  static Partition from_blocks(int n, std::vector<std::vector<int>> blocks);
  // Any map element -> block label; labels are renumbered canonically.
  static Partition from_block_map(const std::vector<int>& block_of);
  static Partition singletons(int n);
  static Partition one_block(int n);
  // pi_{a,b}: merge exactly a and b, everything else a singleton.
  static Partition merge_pair(int n, int a, int b);

  int ground_size() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int x) const { return rgs_[x]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& rgs() const { return rgs_; }

  bool same_block(int x, int y) const { return rgs_[x] == rgs_[y]; }
  // Weak refinement: every block of *this inside a block of coarser.
  bool refines(const Partition& coarser) const;

  std::string to_string(const Poset* names_from = nullptr) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.rgs_ <=> b.rgs_;
  }

 private:
  std::vector<int> rgs_;  // canonical restricted-growth string
  std::vector<std::vector<int>> blocks_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

/// Reflexive transitive relation; antisymmetry not required.
class Quasiorder {
 public:
  explicit Quasiorder(BitRelation rel);
  int size() const { return rel_.size(); }
  bool related(int x, int y) const { return rel_.get(x, y); }
  const BitRelation& rel() const { return rel_; }

 private:
  BitRelation rel_;
};

/// Transitive closure of (leq union rho); the smallest quasiorder extending
/// both the order and the partition's equivalence.
Quasiorder minimal_quasiorder(const Poset& p, const Partition& pi);

/// Quasiorder criterion: pi is an order congruence iff the minimal
/// quasiorder theta satisfies theta cap theta^{-1} = rho.
bool is_order_congruence(const Poset& p, const Partition& pi);

/// Independent route: build the step digraph (arcs x->y for x<y or x rho y)
/// and require every strongly connected component to sit inside one block.
bool is_order_congruence_by_circles(const Poset& p, const Partition& pi);

/// Quotient poset on the blocks (canonical block indexing), with the order
/// induced by the minimal quasiorder. Throws NotACongruence.
Poset quotient_poset(const Poset& p, const Partition& pi);

/// a, b in block and a <= z <= b force z in block.
bool is_order_convex(const Poset& p, const std::vector<int>& block);

/// All set partitions of {0..n-1}, by restricted-growth strings.
std::vector<Partition> all_set_partitions(int n);

}  // namespace ordpart

#endif
