#ifndef ORDPART_WORDS_HPP
#define ORDPART_WORDS_HPP

#include <stdexcept>
#include <vector>

#include "ordpart/bigint.hpp"
#include "ordpart/extensions.hpp"
#include "ordpart/poset.hpp"

namespace ordpart {

class TotalMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class WordError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
  using std::logic_error::logic_error;
};

/// Tuple of positive integers; rank in the composition lattice is
/// total - number of parts.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> parts_in);

  int total() const;
  int part_count() const { return static_cast<int>(parts.size()); }
  int rank() const { return total() - part_count(); }

  // Interior cut positions (strictly between 0 and total), ascending.
  std::vector<int> cuts() const;
  static Composition from_cuts(int total, const std::vector<int>& cuts);

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Word over {1..m} recording which connected component occupies each rank
/// of a linear extension.
struct PWord {
  std::vector<int> letters;  // 1-based letters

  int length() const { return static_cast<int>(letters.size()); }
  int alphabet_size() const;
};

PWord pword_of(const Poset& p, const LinearExtension& f);

/// Cut at every position where prefix and suffix letter sets are disjoint.
Composition finest_detanglement(const PWord& w);

/// Parts of the finest detanglement; 1 + number of cut points.
int detanglement_index(const PWord& w);

/// L is a detanglement of w iff all its boundaries are cut points.
bool is_detanglement(const PWord& w, const Composition& L);

/// Pullback of interval-partition refinement: cuts of the coarser
/// composition form a subset of the cuts of the finer one.
bool refines(const Composition& finer, const Composition& coarser);

/// All compositions of m, ordered by cut bitmask.
std::vector<Composition> all_compositions(int m);

/// Count of words over {1^s, ..., m^s} detangled by s*L:
/// multinomial(m; l_1..l_p) * prod_i multinomial(s*l_i; s..s).
BigInt count_detangled(int m, int s, const Composition& L);

/// Inclusion-exclusion over refinements of L: words whose finest
/// detanglement is exactly s*L.
BigInt count_exact(int m, int s, const Composition& L);

/// Number of distinct P-words with detanglement index t. Closed form for
/// equal-size components, brute force otherwise; the suite checks both
/// agree where both apply.
BigInt count_U(const Poset& p, int t);
BigInt count_U_by_formula(int m, int s, int t);
BigInt count_U_by_enumeration(const Poset& p, int t);

/// e(P) = multinomial(n; |P_1|..|P_m|) * prod e(P_i).
BigInt e_by_components(const Poset& p);

/// e_C(P) = (sum_t U(P,t)/t) * prod e(P_i), evaluated without rationals;
/// throws InternalError if some U(P,t) is not divisible by t.
BigInt e_C_by_words(const Poset& p);

}  // namespace ordpart

#endif
