#ifndef ORDPART_POSET_HPP
#define ORDPART_POSET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordpart {

class CycleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IndexError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class AxiomError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense boolean relation stored as bit rows; cheap transitive closure.
class BitRelation {
 public:
  BitRelation() = default;
  explicit BitRelation(int n);

  int size() const { return n_; }
  bool get(int i, int j) const {
    return (words_[static_cast<std::size_t>(i) * stride_ + (j >> 6)] >>
            (j & 63)) &
           1u;
  }
  void set(int i, int j, bool value = true);

  // Warshall closure, one word-OR per inner step.
  void close_transitively();

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;

  friend bool operator==(const BitRelation&, const BitRelation&) = default;

  // Row-major serialization; used as a memoization key.
  std::string key() const;

 private:
  int n_ = 0;
  int stride_ = 0;  // 64-bit words per row
  std::vector<std::uint64_t> words_;
};

/// Cover pairs (x, y) meaning y covers x. Input need not be reduced.
struct CoverList {
  int n = 0;
  std::vector<std::pair<int, int>> covers;
};

/// Finite poset on elements 0..n-1 with a validated order relation.
/// Immutable after construction; all queries are pure.
class Poset {
 public:
  Poset() = default;

  // Reflexive-transitive closure of an acyclic cover digraph.
  static Poset from_covers(const CoverList& c,
                           std::vector<std::string> names = {});
  // Validates reflexivity, antisymmetry and transitivity.
  static Poset from_relation(BitRelation leq,
                             std::vector<std::string> names = {});

  int size() const { return leq_.size(); }
  bool leq(int x, int y) const { return leq_.get(x, y); }
  bool less(int x, int y) const { return x != y && leq_.get(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  bool incomparable(int x, int y) const { return !comparable(x, y); }
  // y covers x
  bool covers(int x, int y) const;

  const BitRelation& relation() const { return leq_; }

  // Transitive reduction, pairs (x, y) with y covering x, sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // Components of the comparability graph, sorted by smallest member.
  std::vector<std::vector<int>> connected_components() const;
  bool connected() const { return connected_components().size() == 1; }

  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(int x) const;

 private:
  BitRelation leq_;
  std::vector<std::string> names_;
};

/// Seed-reproducible random poset: random DAG on a shuffled linear order,
/// closed transitively. Density 0 gives an antichain, density 1 a chain.
Poset random_poset(int n, double density, std::uint64_t seed);

/// Subposet induced on the given elements (re-indexed in the given order).
Poset induced_subposet(const Poset& p, const std::vector<int>& elements);

}  // namespace ordpart

#endif
