#include "ordpart/words.hpp"

#include <algorithm>
#include <numeric>

namespace ordpart {

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt multinomial(int total, const std::vector<int>& parts) {
  BigInt out = 1;
  int remaining = total;
  for (int part : parts) {
    out *= binomial(remaining, part);
    remaining -= part;
  }
  if (remaining != 0) throw TotalMismatch("parts do not sum to total");
  return out;
}

Composition::Composition(std::vector<int> parts_in)
    : parts(std::move(parts_in)) {
  for (int part : parts) {
    if (part <= 0) throw TotalMismatch("composition parts must be positive");
  }
}

int Composition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> Composition::cuts() const {
  std::vector<int> out;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    sum += parts[i];
    out.push_back(sum);
  }
  return out;
}

Composition Composition::from_cuts(int total, const std::vector<int>& cuts) {
  std::vector<int> parts;
  int prev = 0;
  for (int cut : cuts) {
    parts.push_back(cut - prev);
    prev = cut;
  }
  parts.push_back(total - prev);
  return Composition(std::move(parts));
}

int PWord::alphabet_size() const {
  int m = 0;
  for (int letter : letters) m = std::max(m, letter);
  return m;
}

PWord pword_of(const Poset& p, const LinearExtension& f) {
  const auto comps = p.connected_components();
  std::vector<int> comp_of(p.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (int x : comps[i]) comp_of[x] = static_cast<int>(i) + 1;
  }
  PWord w;
  w.letters.resize(p.size());
  for (int r = 0; r < p.size(); ++r) w.letters[r] = comp_of[f.elem[r]];
  return w;
}

namespace {

// Bitmask of letters present in each prefix/suffix; alphabet capped at 64.
std::vector<int> cut_positions(const PWord& w) {
  const int n = w.length();
  if (w.alphabet_size() > 64) throw WordError("alphabet too large");
  std::vector<std::uint64_t> prefix(n + 1, 0), suffix(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i] | (std::uint64_t{1} << (w.letters[i] - 1));
  }
  for (int i = n - 1; i >= 0; --i) {
    suffix[i] = suffix[i + 1] | (std::uint64_t{1} << (w.letters[i] - 1));
  }
  std::vector<int> cuts;
  for (int i = 1; i < n; ++i) {
    if ((prefix[i] & suffix[i]) == 0) cuts.push_back(i);
  }
  return cuts;
}

}  // namespace

Composition finest_detanglement(const PWord& w) {
  return Composition::from_cuts(w.length(), cut_positions(w));
}

int detanglement_index(const PWord& w) {
  return static_cast<int>(cut_positions(w).size()) + 1;
}

bool is_detanglement(const PWord& w, const Composition& L) {
  if (L.total() != w.length()) {
    throw TotalMismatch("composition total differs from word length");
  }
  const std::vector<int> cuts = cut_positions(w);
  for (int boundary : L.cuts()) {
    if (!std::binary_search(cuts.begin(), cuts.end(), boundary)) return false;
  }
  return true;
}

bool refines(const Composition& finer, const Composition& coarser) {
  if (finer.total() != coarser.total()) {
    throw TotalMismatch("compositions have different totals");
  }
  const std::vector<int> fine = finer.cuts();
  for (int cut : coarser.cuts()) {
    if (!std::binary_search(fine.begin(), fine.end(), cut)) return false;
  }
  return true;
}

std::vector<Composition> all_compositions(int m) {
  std::vector<Composition> out;
  if (m <= 0) return out;
  const int positions = m - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << positions);
       ++mask) {
    std::vector<int> cuts;
    for (int i = 0; i < positions; ++i) {
      if (mask >> i & 1) cuts.push_back(i + 1);
    }
    out.push_back(Composition::from_cuts(m, cuts));
  }
  return out;
}

BigInt count_detangled(int m, int s, const Composition& L) {
  if (L.total() != m) throw TotalMismatch("composition must compose m");
  BigInt out = multinomial(m, L.parts);
  for (int part : L.parts) {
    out *= multinomial(s * part, std::vector<int>(part, s));
  }
  return out;
}

BigInt count_exact(int m, int s, const Composition& L) {
  if (L.total() != m) throw TotalMismatch("composition must compose m");
  const std::vector<int> base_cuts = L.cuts();
  std::vector<int> free_positions;
  for (int i = 1; i < m; ++i) {
    if (!std::binary_search(base_cuts.begin(), base_cuts.end(), i)) {
      free_positions.push_back(i);
    }
  }
  const int extra = static_cast<int>(free_positions.size());
  BigInt out = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << extra); ++mask) {
    std::vector<int> cuts = base_cuts;
    int added = 0;
    for (int i = 0; i < extra; ++i) {
      if (mask >> i & 1) {
        cuts.push_back(free_positions[i]);
        ++added;
      }
    }
    std::sort(cuts.begin(), cuts.end());
    const Composition refinement = Composition::from_cuts(m, cuts);
    const BigInt term = count_detangled(m, s, refinement);
    out += (added % 2 == 0) ? term : -term;
  }
  return out;
}

BigInt count_U_by_formula(int m, int s, int t) {
  BigInt out = 0;
  for (const Composition& L : all_compositions(m)) {
    if (L.part_count() == t) out += count_exact(m, s, L);
  }
  return out;
}

BigInt count_U_by_enumeration(const Poset& p, int t) {
  const auto comps = p.connected_components();
  std::vector<int> letters;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    letters.insert(letters.end(), comps[i].size(), static_cast<int>(i) + 1);
  }
  std::sort(letters.begin(), letters.end());
  BigInt count = 0;
  do {
    PWord w{letters};
    if (detanglement_index(w) == t) ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

BigInt count_U(const Poset& p, int t) {
  const auto comps = p.connected_components();
  const int m = static_cast<int>(comps.size());
  if (t < 1 || t > m) return 0;
  bool equal_sizes = true;
  for (const auto& comp : comps) {
    if (comp.size() != comps[0].size()) equal_sizes = false;
  }
  if (equal_sizes) {
    return count_U_by_formula(m, static_cast<int>(comps[0].size()), t);
  }
  return count_U_by_enumeration(p, t);
}

BigInt e_by_components(const Poset& p) {
  const auto comps = p.connected_components();
  std::vector<int> sizes;
  BigInt product = 1;
  for (const auto& comp : comps) {
    sizes.push_back(static_cast<int>(comp.size()));
    product *= count_linear_extensions(induced_subposet(p, comp));
  }
  return multinomial(p.size(), sizes) * product;
}

BigInt e_C_by_words(const Poset& p) {
  const auto comps = p.connected_components();
  const int m = static_cast<int>(comps.size());
  BigInt product = 1;
  for (const auto& comp : comps) {
    product *= count_linear_extensions(induced_subposet(p, comp));
  }
  BigInt classes = 0;
  for (int t = 1; t <= m; ++t) {
    BigInt u = count_U(p, t);
    if (u % t != 0) {
      throw InternalError("word count with index t is not divisible by t");
    }
    classes += u / t;
  }
  return classes * product;
}

}  // namespace ordpart
