#include "ordpart/congruence.hpp"

#include <algorithm>
#include <string>

namespace ordpart {

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  std::vector<int> block_of(n, -1);
  for (const auto& block : blocks) {
    if (block.empty()) throw PartitionError("empty block");
    for (int x : block) {
      if (x < 0 || x >= n) throw PartitionError("element out of range");
      if (block_of[x] != -1) throw PartitionError("blocks are not disjoint");
      block_of[x] = 0;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (block_of[x] == -1) {
      throw PartitionError("blocks do not cover the ground set");
    }
  }
  int label = 0;
  std::fill(block_of.begin(), block_of.end(), -1);
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (const auto& block : blocks) {
    for (int x : block) block_of[x] = label;
    ++label;
  }
  Partition p;
  p.rgs_ = std::move(block_of);
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::from_block_map(const std::vector<int>& block_of) {
  const int n = static_cast<int>(block_of.size());
  std::vector<std::vector<int>> blocks;
  std::vector<int> label_to_index;
  for (int x = 0; x < n; ++x) {
    int label = block_of[x];
    int idx = -1;
    for (std::size_t i = 0; i < label_to_index.size(); ++i) {
      if (label_to_index[i] == label) {
        idx = static_cast<int>(i);
        break;
      }
    }
    if (idx < 0) {
      idx = static_cast<int>(blocks.size());
      label_to_index.push_back(label);
      blocks.emplace_back();
    }
    blocks[idx].push_back(x);
  }
  return from_blocks(n, std::move(blocks));
}

Partition Partition::singletons(int n) {
  std::vector<int> rgs(n);
  for (int i = 0; i < n; ++i) rgs[i] = i;
  return from_block_map(rgs);
}

Partition Partition::one_block(int n) {
  return from_block_map(std::vector<int>(n, 0));
}

Partition Partition::merge_pair(int n, int a, int b) {
  if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
    throw PartitionError("merge_pair needs two distinct elements in range");
  }
  std::vector<int> rgs(n);
  for (int i = 0; i < n; ++i) rgs[i] = i;
  rgs[std::max(a, b)] = std::min(a, b);
  return from_block_map(rgs);
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.ground_size() != ground_size()) {
    throw SizeMismatch("partitions cover different ground sets");
  }
  std::vector<int> image(block_count(), -1);
  for (int x = 0; x < ground_size(); ++x) {
    int& img = image[rgs_[x]];
    if (img == -1) {
      img = coarser.rgs_[x];
    } else if (img != coarser.rgs_[x]) {
      return false;
    }
  }
  return true;
}

std::string Partition::to_string(const Poset* names_from) const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ',';
      out += names_from ? names_from->name_of(blocks_[i][j])
                        : std::to_string(blocks_[i][j]);
    }
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.rgs()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

Quasiorder::Quasiorder(BitRelation rel) : rel_(std::move(rel)) {
  if (!rel_.is_reflexive() || !rel_.is_transitive()) {
    throw AxiomError("quasiorder must be reflexive and transitive");
  }
}

namespace {

void require_same_ground(const Poset& p, const Partition& pi) {
  if (pi.ground_size() != p.size()) {
    throw SizeMismatch("partition covers a different ground set");
  }
}

}  // namespace

Quasiorder minimal_quasiorder(const Poset& p, const Partition& pi) {
  require_same_ground(p, pi);
  const int n = p.size();
  BitRelation rel(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.leq(x, y) || pi.same_block(x, y)) rel.set(x, y);
    }
  }
  rel.close_transitively();
  return Quasiorder(std::move(rel));
}

bool is_order_congruence(const Poset& p, const Partition& pi) {
  const Quasiorder theta = minimal_quasiorder(p, pi);
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool both = theta.related(x, y) && theta.related(y, x);
      if (both != pi.same_block(x, y)) return false;
    }
  }
  return true;
}

bool is_order_congruence_by_circles(const Poset& p, const Partition& pi) {
  require_same_ground(p, pi);
  const int n = p.size();
  // Step digraph: x -> y whenever x < y or x rho y.
  std::vector<std::vector<int>> adj(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && (p.less(x, y) || pi.same_block(x, y))) {
        adj[x].push_back(y);
      }
    }
  }
  // Tarjan SCC, iterative.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0, comp_count = 0;
  struct Frame {
    int v;
    std::size_t child;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.v].size()) {
        int w = adj[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_count;
            if (w == f.v) break;
          }
          ++comp_count;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
      }
    }
  }
  // Every SCC must stay inside a single block.
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (comp[x] == comp[y] && !pi.same_block(x, y)) return false;
    }
  }
  return true;
}

Poset quotient_poset(const Poset& p, const Partition& pi) {
  if (!is_order_congruence(p, pi)) {
    throw NotACongruence("partition is not an order congruence");
  }
  const Quasiorder theta = minimal_quasiorder(p, pi);
  const int m = pi.block_count();
  BitRelation leq(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (theta.related(pi.blocks()[i][0], pi.blocks()[j][0])) leq.set(i, j);
    }
  }
  return Poset::from_relation(std::move(leq));
}

std::vector<Partition> all_set_partitions(int n) {
  std::vector<Partition> out;
  if (n <= 0) return out;
  std::vector<int> rgs(n, 0), maxv(n, 0);
  while (true) {
    out.push_back(Partition::from_block_map(rgs));
    int i = n - 1;
    while (i > 0 && rgs[i] == maxv[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    maxv[i] = std::max(maxv[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxv[j] = maxv[i];
    }
  }
  return out;
}

bool is_order_convex(const Poset& p, const std::vector<int>& block) {
  std::vector<bool> in_block(p.size(), false);
  for (int x : block) in_block[x] = true;
  for (int a : block) {
    for (int b : block) {
      if (!p.leq(a, b)) continue;
      for (int z = 0; z < p.size(); ++z) {
        if (!in_block[z] && p.leq(a, z) && p.leq(z, b)) return false;
      }
    }
  }
  return true;
}

}  // namespace ordpart
