#ifndef ORDPART_TOPOLOGY_HPP
#define ORDPART_TOPOLOGY_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordpart/bigint.hpp"
#include "ordpart/oplattice.hpp"
#include "ordpart/poset.hpp"

namespace ordpart {

class TooSmall : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A face is a sorted list of vertex ids (lattice node ids).
using Face = std::vector<int>;

struct FaceHash {
  std::size_t operator()(const Face& f) const;
};

/// Downward-closed family of faces, grouped by dimension. Dimension -1
/// holds the single empty face; dimension d lives at index d+1.
class AbstractComplex {
 public:
  static AbstractComplex from_maximal_faces(std::vector<Face> maximal);

  int top_dim() const { return static_cast<int>(levels_.size()) - 2; }
  const std::vector<Face>& faces_of_dim(int d) const {
    return levels_[d + 1];
  }
  std::size_t face_count() const;  // includes the empty face
  bool contains(const Face& f) const { return index_.count(f) > 0; }
  // Position of f within its dimension level; -1 when absent.
  int position_of(const Face& f) const;
  std::vector<int> vertices() const;

  friend AbstractComplex order_complex(const OpLattice& lattice);

 private:
  void insert(Face f);
  void finalize();

  std::vector<std::vector<Face>> levels_{1};
  std::unordered_map<Face, std::pair<int, int>, FaceHash> index_;
};

/// All chains of the proper part of the lattice, including the empty face.
AbstractComplex order_complex(const OpLattice& lattice);

/// Faces ordered by containment; covers add exactly one vertex.
class FacePoset {
 public:
  explicit FacePoset(const AbstractComplex& complex) : complex_(&complex) {}
  const AbstractComplex& complex() const { return *complex_; }
  bool covers(const Face& lower, const Face& upper) const;

 private:
  const AbstractComplex* complex_;
};

/// Pairs (upper, lower) of faces differing by one vertex; unmatched faces
/// are critical.
struct MorseMatching {
  std::vector<std::pair<Face, Face>> pairs;
  std::vector<Face> critical;
};

/// Recursive acyclic matching on the face poset of the order complex:
/// fibers over the partitions isolating a fixed minimal element are matched
/// by toggling, and the bottom fiber recurses into the atom quotients.
/// All critical faces end up in dimension n-3; the empty face is matched.
MorseMatching build_matching(const Poset& p);
MorseMatching build_matching(const Poset& p, const OpLattice& lattice);

/// Pairing disjointness, cover adjacency, and acyclicity of the modified
/// Hasse digraph (checked one dimension layer at a time).
bool verify_matching(const FacePoset& fp, const MorseMatching& m);

/// Reduced Betti numbers and torsion, from integer Smith normal forms of
/// the augmented boundary matrices.
struct HomologyReport {
  int top_dim = -1;
  std::vector<std::int64_t> betti;           // betti[d+1] = reduced Betti_d
  std::vector<std::vector<BigInt>> torsion;  // torsion[d+1], factors > 1

  std::int64_t betti_at(int d) const;
  bool torsion_free() const;
};

HomologyReport reduced_homology(const AbstractComplex& complex);

/// Sphere count by the quotient recurrence: the 3-element base case counts
/// the proper part minus one, larger posets sum over the order-preserving
/// atom partitions of a fixed minimal element.
BigInt spheres_by_recurrence(const Poset& p);

/// Four independent routes to the sphere count, with their agreement.
struct HomotopyReport {
  int n = 0;
  BigInt cyclic_extensions;
  BigInt recurrence;
  std::int64_t critical_count = 0;
  std::vector<int> critical_dims;  // distinct dimensions, sorted
  HomologyReport homology;
  bool agree = false;
};

HomotopyReport homotopy_report(const Poset& p);
HomotopyReport homotopy_report(const Poset& p, const OpLattice& lattice);

}  // namespace ordpart

#endif
