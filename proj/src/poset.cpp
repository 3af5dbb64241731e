#include "ordpart/poset.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ordpart {

BitRelation::BitRelation(int n)
    : n_(n), stride_((n + 63) / 64),
      words_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

void BitRelation::set(int i, int j, bool value) {
  auto& w = words_[static_cast<std::size_t>(i) * stride_ + (j >> 6)];
  if (value) {
    w |= std::uint64_t{1} << (j & 63);
  } else {
    w &= ~(std::uint64_t{1} << (j & 63));
  }
}

void BitRelation::close_transitively() {
  for (int k = 0; k < n_; ++k) {
    const std::size_t row_k = static_cast<std::size_t>(k) * stride_;
    for (int i = 0; i < n_; ++i) {
      if (get(i, k)) {
        const std::size_t row_i = static_cast<std::size_t>(i) * stride_;
        for (int w = 0; w < stride_; ++w) {
          words_[row_i + w] |= words_[row_k + w];
        }
      }
    }
  }
}

bool BitRelation::is_reflexive() const {
  for (int i = 0; i < n_; ++i) {
    if (!get(i, i)) return false;
  }
  return true;
}

bool BitRelation::is_transitive() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (!get(i, j)) continue;
      for (int k = 0; k < n_; ++k) {
        if (get(j, k) && !get(i, k)) return false;
      }
    }
  }
  return true;
}

bool BitRelation::is_antisymmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (get(i, j) && get(j, i)) return false;
    }
  }
  return true;
}

std::string BitRelation::key() const {
  std::string out;
  out.reserve(sizeof(int) + words_.size() * 8);
  out.append(reinterpret_cast<const char*>(&n_), sizeof(int));
  out.append(reinterpret_cast<const char*>(words_.data()), words_.size() * 8);
  return out;
}

Poset Poset::from_covers(const CoverList& c, std::vector<std::string> names) {
  const int n = c.n;
  if (n < 0) throw IndexError("element count must be nonnegative");
  for (auto [x, y] : c.covers) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw IndexError("cover pair references an element out of range");
    }
  }

  // Kahn's algorithm detects directed cycles.
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (auto [x, y] : c.covers) {
    if (x == y) throw CycleError("self-loop in cover list");
    succ[x].push_back(y);
    ++indeg[y];
  }
  std::vector<int> queue;
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) queue.push_back(i);
  }
  int seen = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ++seen;
    for (int y : succ[queue[head]]) {
      if (--indeg[y] == 0) queue.push_back(y);
    }
  }
  if (seen != n) throw CycleError("cover digraph has a directed cycle");

  BitRelation leq(n);
  for (int i = 0; i < n; ++i) leq.set(i, i);
  for (auto [x, y] : c.covers) leq.set(x, y);
  leq.close_transitively();
  return from_relation(std::move(leq), std::move(names));
}

Poset Poset::from_relation(BitRelation leq, std::vector<std::string> names) {
  if (!leq.is_reflexive()) throw AxiomError("relation is not reflexive");
  if (!leq.is_antisymmetric()) throw AxiomError("relation is not antisymmetric");
  if (!leq.is_transitive()) throw AxiomError("relation is not transitive");
  if (!names.empty() && static_cast<int>(names.size()) != leq.size()) {
    throw IndexError("name list length differs from element count");
  }
  Poset p;
  p.leq_ = std::move(leq);
  p.names_ = std::move(names);
  return p;
}

bool Poset::covers(int x, int y) const {
  if (!less(x, y)) return false;
  for (int z = 0; z < size(); ++z) {
    if (z != x && z != y && less(x, z) && less(z, y)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x) {
    for (int y = 0; y < size(); ++y) {
      if (covers(x, y)) out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool minimal = true;
    for (int y = 0; y < size(); ++y) {
      if (less(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool maximal = true;
    for (int y = 0; y < size(); ++y) {
      if (less(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> Poset::connected_components() const {
  const int n = size();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (comparable(x, y)) root[find(x)] = find(y);
    }
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_idx(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (comp_idx[r] < 0) {
      comp_idx[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_idx[r]].push_back(x);
  }
  // Elements were scanned in order, so each component is sorted and the
  // component list is sorted by smallest member already.
  return comps;
}

std::string Poset::name_of(int x) const {
  if (!names_.empty()) return names_[x];
  return std::to_string(x);
}

Poset random_poset(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto next_below = [&rng](int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
  };
  auto next_unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[next_below(i + 1)]);
  }

  BitRelation leq(n);
  for (int i = 0; i < n; ++i) leq.set(i, i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (next_unit() < density) leq.set(order[i], order[j]);
    }
  }
  leq.close_transitively();
  return Poset::from_relation(std::move(leq));
}

Poset induced_subposet(const Poset& p, const std::vector<int>& elements) {
  const int m = static_cast<int>(elements.size());
  BitRelation leq(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (p.leq(elements[i], elements[j])) leq.set(i, j);
    }
  }
  std::vector<std::string> names;
  if (!p.names().empty()) {
    for (int e : elements) names.push_back(p.names()[e]);
  }
  return Poset::from_relation(std::move(leq), std::move(names));
}

}  // namespace ordpart
