#include "ordpart/oplattice.hpp"

#include <algorithm>

namespace ordpart {

namespace {

void require_congruence(const Poset& p, const Partition& pi) {
  if (!is_order_congruence(p, pi)) {
    throw NotACongruence("input partition is not order-preserving");
  }
}

}  // namespace

int OpLattice::index_of(const Partition& pi) const {
  auto it = index_.find(pi);
  return it == index_.end() ? -1 : it->second;
}

int OpLattice::require_index(const Partition& pi) const {
  int id = index_of(pi);
  if (id < 0) throw NotACongruence("partition is not a lattice node");
  return id;
}

std::vector<int> OpLattice::proper_part() const {
  std::vector<int> out;
  const Partition bottom = Partition::singletons(base_.size());
  const Partition top = Partition::one_block(base_.size());
  for (int id = 0; id < node_count(); ++id) {
    if (nodes_[id] != bottom && nodes_[id] != top) out.push_back(id);
  }
  return out;
}

OpLattice enumerate_oplattice(const Poset& p) {
  OpLattice lat;
  lat.base_ = p;
  const int n = p.size();

  for (Partition& pi : all_set_partitions(n)) {
    if (is_order_congruence(p, pi)) lat.nodes_.push_back(std::move(pi));
  }
  std::sort(lat.nodes_.begin(), lat.nodes_.end(),
            [n](const Partition& a, const Partition& b) {
              int ra = n - a.block_count(), rb = n - b.block_count();
              if (ra != rb) return ra < rb;
              return a < b;
            });
  for (int id = 0; id < lat.node_count(); ++id) {
    lat.index_.emplace(lat.nodes_[id], id);
  }

  lat.leq_ = BitRelation(lat.node_count());
  for (int i = 0; i < lat.node_count(); ++i) {
    for (int j = 0; j < lat.node_count(); ++j) {
      if (lat.nodes_[i].block_count() >= lat.nodes_[j].block_count() &&
          lat.nodes_[i].refines(lat.nodes_[j])) {
        lat.leq_.set(i, j);
      }
    }
  }

  // Strict refinement raises rank by at least one, so rank-step-one
  // refinement pairs are exactly the covers of a ranked lattice. The test
  // suite checks this against the no-node-strictly-between definition.
  for (int i = 0; i < lat.node_count(); ++i) {
    for (int j = 0; j < lat.node_count(); ++j) {
      if (lat.rank_of(j) == lat.rank_of(i) + 1 && i != j &&
          lat.node_leq(i, j)) {
        lat.cover_edges_.emplace_back(i, j);
      }
    }
  }
  std::sort(lat.cover_edges_.begin(), lat.cover_edges_.end());
  return lat;
}

Partition meet(const Poset& p, const Partition& a, const Partition& b) {
  require_congruence(p, a);
  require_congruence(p, b);
  const int n = p.size();
  std::vector<int> key(n);
  for (int x = 0; x < n; ++x) {
    key[x] = a.block_of(x) * (b.block_count() + 1) + b.block_of(x);
  }
  return Partition::from_block_map(key);
}

Partition join(const Poset& p, const Partition& a, const Partition& b) {
  require_congruence(p, a);
  require_congruence(p, b);
  const int n = p.size();
  BitRelation rel(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.leq(x, y) || a.same_block(x, y) || b.same_block(x, y)) {
        rel.set(x, y);
      }
    }
  }
  rel.close_transitively();
  std::vector<int> label(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (label[x] != -1) continue;
    label[x] = next;
    for (int y = x + 1; y < n; ++y) {
      if (rel.get(x, y) && rel.get(y, x)) label[y] = next;
    }
    ++next;
  }
  return Partition::from_block_map(label);
}

bool is_cover(const Poset& p, const Partition& finer,
              const Partition& coarser) {
  require_congruence(p, finer);
  require_congruence(p, coarser);
  if (coarser.block_count() != finer.block_count() - 1) return false;
  if (!finer.refines(coarser)) return false;
  // Exactly two blocks of finer share a coarser block; find them.
  std::vector<std::vector<int>> grouped(coarser.block_count());
  for (int i = 0; i < finer.block_count(); ++i) {
    grouped[coarser.block_of(finer.blocks()[i][0])].push_back(i);
  }
  int b1 = -1, b2 = -1;
  for (const auto& g : grouped) {
    if (g.size() == 2) {
      b1 = g[0];
      b2 = g[1];
    }
  }
  if (b1 < 0) return false;
  const Poset q = quotient_poset(p, finer);
  return q.incomparable(b1, b2) || q.covers(b1, b2) || q.covers(b2, b1);
}

std::vector<Partition> atoms(const Poset& p) {
  std::vector<Partition> out;
  for (int a = 0; a < p.size(); ++a) {
    for (int b = a + 1; b < p.size(); ++b) {
      if (p.incomparable(a, b) || p.covers(a, b) || p.covers(b, a)) {
        out.push_back(Partition::merge_pair(p.size(), a, b));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ordpart
