#include "ordpart/extensions.hpp"

#include <algorithm>
#include <map>

namespace ordpart {

LinearExtension::LinearExtension(std::vector<int> f) : rank(std::move(f)) {
  const int n = static_cast<int>(rank.size());
  elem.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (rank[x] < 0 || rank[x] >= n || elem[rank[x]] != -1) {
      throw AxiomError("rank array is not a bijection onto 0..n-1");
    }
    elem[rank[x]] = x;
  }
}

bool is_linear_extension(const Poset& p, const std::vector<int>& rank) {
  const int n = p.size();
  if (static_cast<int>(rank.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : rank) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.leq(x, y) && rank[x] > rank[y]) return false;
    }
  }
  return true;
}

namespace {

// Backtracking over the currently minimal elements of the remainder.
template <typename Emit>
void extension_backtrack(const Poset& p, Emit&& emit) {
  const int n = p.size();
  std::vector<int> pending(n, 0);  // strict predecessors not yet placed
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.less(y, x)) ++pending[x];
    }
  }
  std::vector<int> sequence;
  std::vector<bool> placed(n, false);
  sequence.reserve(n);
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(sequence.size()) == n) {
      emit(sequence);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (placed[x] || pending[x] != 0) continue;
      placed[x] = true;
      sequence.push_back(x);
      for (int y = 0; y < n; ++y) {
        if (p.less(x, y)) --pending[y];
      }
      self(self);
      for (int y = 0; y < n; ++y) {
        if (p.less(x, y)) ++pending[y];
      }
      sequence.pop_back();
      placed[x] = false;
    }
  };
  recurse(recurse);
}

}  // namespace

std::vector<LinearExtension> linear_extensions(const Poset& p) {
  std::vector<LinearExtension> out;
  extension_backtrack(p, [&](const std::vector<int>& sequence) {
    std::vector<int> rank(p.size());
    for (int r = 0; r < p.size(); ++r) rank[sequence[r]] = r;
    out.emplace_back(std::move(rank));
  });
  std::sort(out.begin(), out.end(),
            [](const LinearExtension& a, const LinearExtension& b) {
              return a.rank < b.rank;
            });
  return out;
}

BigInt count_linear_extensions(const Poset& p) {
  BigInt count = 0;
  extension_backtrack(p, [&](const std::vector<int>&) { ++count; });
  return count;
}

int oplus(const LinearExtension& f, int x, int k) {
  const int n = f.size();
  return f.elem[(f.rank[x] + k) % n];
}

std::vector<int> action_cycle(const LinearExtension& f) {
  std::vector<int> succ(f.size());
  for (int x = 0; x < f.size(); ++x) succ[x] = oplus(f, x, 1);
  return succ;
}

std::optional<LinearExtension> shift_extension(const Poset& p,
                                               const LinearExtension& g,
                                               int k) {
  const int n = p.size();
  for (const auto& comp : p.connected_components()) {
    bool wraps = g.rank[comp[0]] + k >= n;
    for (int x : comp) {
      if ((g.rank[x] + k >= n) != wraps) return std::nullopt;
    }
  }
  std::vector<int> rank(n);
  for (int x = 0; x < n; ++x) rank[x] = (g.rank[x] + k) % n;
  return LinearExtension(std::move(rank));
}

std::vector<CyclicClass> cyclic_classes(const Poset& p) {
  std::map<std::vector<int>, CyclicClass> by_cycle;
  for (auto& f : linear_extensions(p)) {
    std::vector<int> cycle = action_cycle(f);
    auto& cls = by_cycle[cycle];
    cls.cycle = cycle;
    cls.members.push_back(std::move(f));
  }
  std::vector<CyclicClass> out;
  out.reserve(by_cycle.size());
  for (auto& [cycle, cls] : by_cycle) out.push_back(std::move(cls));
  // Members emerged lexicographically sorted; order classes by first member.
  std::sort(out.begin(), out.end(), [](const CyclicClass& a,
                                       const CyclicClass& b) {
    return a.members[0].rank < b.members[0].rank;
  });
  return out;
}

namespace {

void require_minimal(const Poset& p, int a) {
  for (int y = 0; y < p.size(); ++y) {
    if (p.less(y, a)) throw NotMinimal("element is not minimal");
  }
}

}  // namespace

std::pair<Partition, LinearExtension> contract(const Poset& p,
                                               const LinearExtension& f,
                                               int a) {
  const int n = p.size();
  require_minimal(p, a);
  const int b = oplus(f, a, 1);
  Partition pi = Partition::merge_pair(n, a, b);
  const Poset q = quotient_poset(p, pi);  // order-preserving by construction

  const int fa = f.rank[a];
  std::vector<int> rank(q.size());
  for (int block = 0; block < pi.block_count(); ++block) {
    if (pi.blocks()[block].size() == 2) {
      rank[block] = std::min(fa, f.rank[b]);
    } else {
      int fx = f.rank[pi.blocks()[block][0]];
      rank[block] = fx < fa ? fx : fx - 1;
    }
  }
  return {std::move(pi), LinearExtension(std::move(rank))};
}

LinearExtension expand(const Poset& p, int a, int b,
                       const LinearExtension& g) {
  const int n = p.size();
  require_minimal(p, a);
  Partition pi = Partition::merge_pair(n, a, b);
  if (!is_order_congruence(p, pi)) {
    throw NotACongruence("pi_{a,b} is not order-preserving");
  }
  const Poset q = quotient_poset(p, pi);
  if (g.size() != q.size() || !is_linear_extension(q, g.rank)) {
    throw AxiomError("g is not a linear extension of the quotient");
  }
  const int merged = pi.block_of(a);
  const int split = g.rank[merged];
  std::vector<int> rank(n);
  rank[a] = split;
  rank[b] = split + 1;
  for (int block = 0; block < pi.block_count(); ++block) {
    if (block == merged) continue;
    int x = pi.blocks()[block][0];
    rank[x] = g.rank[block] < split ? g.rank[block] : g.rank[block] + 1;
  }
  return LinearExtension(std::move(rank));
}

}  // namespace ordpart
