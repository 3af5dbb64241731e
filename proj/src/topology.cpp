#include "ordpart/topology.hpp"

#include <algorithm>
#include <set>

#include "ordpart/extensions.hpp"
#include "ordpart/snf.hpp"

namespace ordpart {

std::size_t FaceHash::operator()(const Face& f) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : f) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

void AbstractComplex::insert(Face f) {
  const int level = static_cast<int>(f.size());
  if (level >= static_cast<int>(levels_.size())) levels_.resize(level + 1);
  levels_[level].push_back(std::move(f));
}

void AbstractComplex::finalize() {
  for (auto& level : levels_) std::sort(level.begin(), level.end());
  index_.clear();
  for (int level = 0; level < static_cast<int>(levels_.size()); ++level) {
    for (int pos = 0; pos < static_cast<int>(levels_[level].size()); ++pos) {
      index_.emplace(levels_[level][pos], std::make_pair(level - 1, pos));
    }
  }
}

AbstractComplex AbstractComplex::from_maximal_faces(std::vector<Face> maximal) {
  std::set<Face> closed;
  closed.insert(Face{});
  auto close_down = [&](auto&& self, const Face& f) -> void {
    if (!closed.insert(f).second) return;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face facet = f;
      facet.erase(facet.begin() + static_cast<long>(i));
      self(self, facet);
    }
  };
  for (Face& f : maximal) {
    std::sort(f.begin(), f.end());
    close_down(close_down, f);
  }
  AbstractComplex out;
  for (const Face& f : closed) out.insert(f);
  out.finalize();
  return out;
}

std::size_t AbstractComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& level : levels_) total += level.size();
  return total;
}

int AbstractComplex::position_of(const Face& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? -1 : it->second.second;
}

std::vector<int> AbstractComplex::vertices() const {
  std::vector<int> out;
  for (const Face& f : faces_of_dim(0)) out.push_back(f[0]);
  return out;
}

AbstractComplex order_complex(const OpLattice& lattice) {
  if (lattice.base().size() < 3) {
    throw TooSmall("order complex needs a poset with at least 3 elements");
  }
  const std::vector<int> proper = lattice.proper_part();
  // Node ids ascend with rank, so chains are increasing id sequences.
  std::vector<std::vector<int>> above(lattice.node_count());
  for (std::size_t i = 0; i < proper.size(); ++i) {
    for (std::size_t j = i + 1; j < proper.size(); ++j) {
      if (lattice.node_leq(proper[i], proper[j])) {
        above[proper[i]].push_back(proper[j]);
      }
    }
  }
  AbstractComplex out;
  out.insert(Face{});
  Face chain;
  auto extend = [&](auto&& self, int v) -> void {
    chain.push_back(v);
    out.insert(chain);
    for (int w : above[v]) self(self, w);
    chain.pop_back();
  };
  for (int v : proper) extend(extend, v);
  out.finalize();
  return out;
}

bool FacePoset::covers(const Face& lower, const Face& upper) const {
  if (upper.size() != lower.size() + 1) return false;
  if (!complex_->contains(lower) || !complex_->contains(upper)) return false;
  return std::includes(upper.begin(), upper.end(), lower.begin(),
                       lower.end());
}

namespace {

Partition split_off(const Partition& pi, int a) {
  std::vector<int> rgs = pi.rgs();
  rgs[a] = pi.block_count();  // fresh label; canonicalized on construction
  return Partition::from_block_map(rgs);
}

Partition expand_through(const Partition& atom, const Partition& quotient) {
  std::vector<int> rgs(atom.ground_size());
  for (int x = 0; x < atom.ground_size(); ++x) {
    rgs[x] = quotient.block_of(atom.block_of(x));
  }
  return Partition::from_block_map(rgs);
}

Face with_vertex(const Face& f, int v) {
  Face out;
  out.reserve(f.size() + 1);
  auto it = std::lower_bound(f.begin(), f.end(), v);
  out.insert(out.end(), f.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, f.end());
  return out;
}

}  // namespace

MorseMatching build_matching(const Poset& p) {
  return build_matching(p, enumerate_oplattice(p));
}

MorseMatching build_matching(const Poset& p, const OpLattice& lattice) {
  const int n = p.size();
  if (n < 3) throw TooSmall("matching needs a poset with at least 3 elements");
  const AbstractComplex complex = order_complex(lattice);
  MorseMatching out;

  if (n == 3) {
    // The proper part is an antichain: match the empty face with the first
    // vertex, the rest are critical.
    const auto& vertex_faces = complex.faces_of_dim(0);
    out.pairs.emplace_back(vertex_faces[0], Face{});
    for (std::size_t i = 1; i < vertex_faces.size(); ++i) {
      out.critical.push_back(vertex_faces[i]);
    }
    return out;
  }

  const int a = p.minimal_elements()[0];
  std::vector<std::vector<int>> pia_blocks(2);
  pia_blocks[0] = {a};
  for (int x = 0; x < n; ++x) {
    if (x != a) pia_blocks[1].push_back(x);
  }
  const int pia_id =
      lattice.require_index(Partition::from_blocks(n, pia_blocks));
  const int bottom_id = lattice.bottom();

  // Per node: does {a} stand alone, and if not, where does splitting a off
  // land (the meet with pi_a)?
  std::vector<bool> isolates_a(lattice.node_count());
  std::vector<int> split_target(lattice.node_count(), -1);
  for (int id = 0; id < lattice.node_count(); ++id) {
    const Partition& pi = lattice.node(id);
    isolates_a[id] = pi.blocks()[pi.block_of(a)].size() == 1;
    if (!isolates_a[id]) {
      split_target[id] = lattice.require_index(split_off(pi, a));
    }
  }

  std::size_t bottom_fiber_size = 0;
  for (int d = -1; d <= complex.top_dim(); ++d) {
    for (const Face& c : complex.faces_of_dim(d)) {
      int phi = pia_id;
      for (int id : c) {
        if (!isolates_a[id]) {
          phi = split_target[id];
          break;
        }
      }
      if (phi == bottom_id) {
        ++bottom_fiber_size;
        continue;  // handled by the atom recursion below
      }
      if (!std::binary_search(c.begin(), c.end(), phi)) {
        out.pairs.emplace_back(with_vertex(c, phi), c);
      }
    }
  }

  std::size_t lifted = 0;
  for (int b = 0; b < n; ++b) {
    if (b == a) continue;
    const Partition atom = Partition::merge_pair(n, a, b);
    const int atom_id = lattice.index_of(atom);
    if (atom_id < 0) continue;

    const Poset quotient = quotient_poset(p, atom);
    const OpLattice sub = enumerate_oplattice(quotient);
    const MorseMatching inner = build_matching(quotient, sub);

    std::vector<int> translate(sub.node_count());
    for (int qid = 0; qid < sub.node_count(); ++qid) {
      translate[qid] =
          lattice.require_index(expand_through(atom, sub.node(qid)));
    }
    auto lift = [&](const Face& f) {
      Face mapped;
      mapped.reserve(f.size() + 1);
      for (int qid : f) mapped.push_back(translate[qid]);
      mapped.push_back(atom_id);
      std::sort(mapped.begin(), mapped.end());
      return mapped;
    };
    for (const auto& [upper, lower] : inner.pairs) {
      out.pairs.emplace_back(lift(upper), lift(lower));
      lifted += 2;
    }
    for (const Face& f : inner.critical) {
      out.critical.push_back(lift(f));
      ++lifted;
    }
  }
  if (lifted != bottom_fiber_size) {
    throw std::logic_error("atom fibers do not cover the bottom fiber");
  }
  return out;
}

bool verify_matching(const FacePoset& fp, const MorseMatching& m) {
  const AbstractComplex& complex = fp.complex();
  std::unordered_map<Face, int, FaceHash> used;
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    const auto& [upper, lower] = m.pairs[i];
    if (!fp.covers(lower, upper)) return false;
    if (!used.emplace(upper, static_cast<int>(i)).second) return false;
    if (!used.emplace(lower, static_cast<int>(i)).second) return false;
  }
  for (const Face& f : m.critical) {
    if (!complex.contains(f)) return false;
    if (!used.emplace(f, -1).second) return false;
  }

  // Acyclicity layer by layer: an alternating cycle stays among pairs whose
  // upper faces share one dimension.
  std::unordered_map<Face, int, FaceHash> pair_of_lower;
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    pair_of_lower.emplace(m.pairs[i].second, static_cast<int>(i));
  }
  std::vector<std::vector<int>> layers;
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    const std::size_t d = m.pairs[i].first.size();  // dimension + 1
    if (d >= layers.size()) layers.resize(d + 1);
    layers[d].push_back(static_cast<int>(i));
  }
  for (const auto& layer : layers) {
    std::unordered_map<int, std::vector<int>> next;
    for (int i : layer) {
      const Face& upper = m.pairs[i].first;
      for (std::size_t drop = 0; drop < upper.size(); ++drop) {
        Face facet = upper;
        facet.erase(facet.begin() + static_cast<long>(drop));
        auto it = pair_of_lower.find(facet);
        if (it != pair_of_lower.end() && it->second != i &&
            m.pairs[it->second].first.size() == upper.size()) {
          next[i].push_back(it->second);
        }
      }
    }
    // Iterative three-color DFS.
    std::unordered_map<int, int> color;
    for (int start : layer) {
      if (color.count(start)) continue;
      std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
      color[start] = 1;
      while (!stack.empty()) {
        auto& [v, child] = stack.back();
        const auto& succ = next[v];
        if (child < succ.size()) {
          int w = succ[child++];
          auto cit = color.find(w);
          if (cit == color.end()) {
            color[w] = 1;
            stack.push_back({w, 0});
          } else if (cit->second == 1) {
            return false;  // back edge closes an alternating cycle
          }
        } else {
          color[v] = 2;
          stack.pop_back();
        }
      }
    }
  }
  return true;
}

std::int64_t HomologyReport::betti_at(int d) const {
  if (d + 1 < 0 || d + 1 >= static_cast<int>(betti.size())) return 0;
  return betti[d + 1];
}

bool HomologyReport::torsion_free() const {
  for (const auto& factors : torsion) {
    if (!factors.empty()) return false;
  }
  return true;
}

HomologyReport reduced_homology(const AbstractComplex& complex) {
  const int top = complex.top_dim();
  HomologyReport out;
  out.top_dim = top;
  out.betti.assign(top + 2, 0);
  out.torsion.assign(top + 2, {});

  std::vector<int> rank(top + 2, 0);  // rank[d+1] = rank of boundary_d
  std::vector<std::vector<BigInt>> factors(top + 2);
  for (int d = 0; d <= top; ++d) {
    const auto& faces = complex.faces_of_dim(d);
    SparseIntMatrix boundary;
    boundary.rows =
        static_cast<int>(complex.faces_of_dim(d - 1).size());
    boundary.cols = static_cast<int>(faces.size());
    for (int j = 0; j < boundary.cols; ++j) {
      const Face& f = faces[j];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face facet = f;
        facet.erase(facet.begin() + static_cast<long>(drop));
        boundary.add(complex.position_of(facet), j,
                     drop % 2 == 0 ? 1 : -1);
      }
    }
    SmithResult snf = smith_normal_form(boundary);
    rank[d + 1] = snf.rank;
    factors[d + 1] = snf.nontrivial_factors();
  }

  for (int d = -1; d <= top; ++d) {
    const std::int64_t f_d =
        static_cast<std::int64_t>(complex.faces_of_dim(d).size());
    const int rank_d = rank[d + 1];
    const int rank_up = (d + 2 <= top + 1) ? rank[d + 2] : 0;
    out.betti[d + 1] = f_d - rank_d - rank_up;
    if (d + 2 <= top + 1) out.torsion[d + 1] = factors[d + 2];
  }
  return out;
}

namespace {

BigInt spheres_recurse(const Poset& p,
                       std::unordered_map<std::string, BigInt>& memo) {
  const int n = p.size();
  const std::string key = p.relation().key();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  BigInt result;
  if (n == 3) {
    result = enumerate_oplattice(p).node_count() - 3;
  } else {
    result = 0;
    const int a = p.minimal_elements()[0];
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      const Partition atom = Partition::merge_pair(n, a, b);
      if (!is_order_congruence(p, atom)) continue;
      result += spheres_recurse(quotient_poset(p, atom), memo);
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

BigInt spheres_by_recurrence(const Poset& p) {
  if (p.size() < 3) {
    throw TooSmall("sphere count needs a poset with at least 3 elements");
  }
  std::unordered_map<std::string, BigInt> memo;
  return spheres_recurse(p, memo);
}

HomotopyReport homotopy_report(const Poset& p) {
  return homotopy_report(p, enumerate_oplattice(p));
}

HomotopyReport homotopy_report(const Poset& p, const OpLattice& lattice) {
  const int n = p.size();
  if (n < 3) throw TooSmall("report needs a poset with at least 3 elements");

  HomotopyReport report;
  report.n = n;

  report.homology = reduced_homology(order_complex(lattice));

  const MorseMatching matching = build_matching(p, lattice);
  report.critical_count = static_cast<std::int64_t>(matching.critical.size());
  std::set<int> dims;
  for (const Face& f : matching.critical) {
    dims.insert(static_cast<int>(f.size()) - 1);
  }
  report.critical_dims.assign(dims.begin(), dims.end());

  report.recurrence = spheres_by_recurrence(p);
  report.cyclic_extensions = BigInt(cyclic_classes(p).size());

  const int d = n - 3;
  bool agree = report.recurrence == report.cyclic_extensions &&
               BigInt(report.critical_count) == report.cyclic_extensions &&
               report.critical_dims == std::vector<int>{d} &&
               report.homology.torsion_free();
  for (int dim = -1; dim <= report.homology.top_dim; ++dim) {
    const std::int64_t expected =
        dim == d ? report.homology.betti_at(d) : 0;
    if (report.homology.betti_at(dim) != expected) agree = false;
  }
  agree = agree && BigInt(report.homology.betti_at(d)) ==
                       report.cyclic_extensions;
  report.agree = agree;
  return report;
}

}  // namespace ordpart
