#include "ordpart/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "ordpart/extensions.hpp"
#include "ordpart/fixtures.hpp"
#include "ordpart/io.hpp"
#include "ordpart/oplattice.hpp"
#include "ordpart/topology.hpp"
#include "ordpart/words.hpp"

namespace ordpart::verify {

namespace {

struct Context {
  const Instance& inst;
  const Options& options;
  OpLattice lattice;
  std::vector<LinearExtension> exts;
  std::vector<CyclicClass> classes;

  explicit Context(const Instance& instance, const Options& opts)
      : inst(instance), options(opts),
        lattice(enumerate_oplattice(instance.poset)),
        exts(linear_extensions(instance.poset)),
        classes(cyclic_classes(instance.poset)) {}

  const Poset& p() const { return inst.poset; }
  int n() const { return inst.poset.size(); }
};

struct Outcome {
  enum Kind { Pass, Fail, Skip } kind = Pass;
  std::string message;

  static Outcome pass() { return {}; }
  static Outcome skip() { return {Skip, ""}; }
  static Outcome fail(std::string msg) { return {Fail, std::move(msg)}; }
};

Outcome check_poset_axioms(Context& ctx) {
  const Poset& p = ctx.p();
  const BitRelation& rel = p.relation();
  if (!rel.is_reflexive()) return Outcome::fail("relation not reflexive");
  if (!rel.is_antisymmetric()) {
    return Outcome::fail("relation not antisymmetric");
  }
  if (!rel.is_transitive()) return Outcome::fail("relation not transitive");

  const Poset rebuilt = Poset::from_covers(CoverList{p.size(), p.cover_pairs()});
  if (!(rebuilt.relation() == rel)) {
    return Outcome::fail("cover reduction does not rebuild the relation");
  }

  std::vector<int> seen(p.size(), 0);
  for (const auto& comp : p.connected_components()) {
    for (int x : comp) ++seen[x];
  }
  for (int count : seen) {
    if (count != 1) return Outcome::fail("components are not a partition");
  }
  return Outcome::pass();
}

Outcome check_congruence_routes(Context& ctx) {
  if (ctx.n() > 5) return Outcome::skip();
  for (const Partition& pi : all_set_partitions(ctx.n())) {
    if (is_order_congruence(ctx.p(), pi) !=
        is_order_congruence_by_circles(ctx.p(), pi)) {
      return Outcome::fail("routes disagree on " + pi.to_string());
    }
  }
  return Outcome::pass();
}

Outcome check_congruence_convexity(Context& ctx) {
  for (const Partition& pi : ctx.lattice.nodes()) {
    for (const auto& block : pi.blocks()) {
      if (!is_order_convex(ctx.p(), block)) {
        return Outcome::fail("non-convex block in " + pi.to_string());
      }
    }
  }
  return Outcome::pass();
}

Outcome check_quotient_kernel(Context& ctx) {
  const Poset& p = ctx.p();
  for (const Partition& pi : ctx.lattice.nodes()) {
    Poset q;
    try {
      q = quotient_poset(p, pi);  // validates the order axioms internally
    } catch (const std::exception& e) {
      return Outcome::fail(std::string("quotient failed: ") + e.what());
    }
    if (q.size() != pi.block_count()) {
      return Outcome::fail("quotient size differs from block count");
    }
    for (int x = 0; x < p.size(); ++x) {
      for (int y = 0; y < p.size(); ++y) {
        if (p.leq(x, y) && !q.leq(pi.block_of(x), pi.block_of(y))) {
          return Outcome::fail("block map not order-preserving for " +
                               pi.to_string());
        }
      }
    }
  }
  return Outcome::pass();
}

Outcome check_lattice_shape(Context& ctx) {
  const OpLattice& lat = ctx.lattice;
  const int n = ctx.n();
  if (lat.node(0) != Partition::singletons(n)) {
    return Outcome::fail("node 0 is not the all-singletons partition");
  }
  if (lat.node(lat.top()) != Partition::one_block(n)) {
    return Outcome::fail("last node is not the one-block partition");
  }
  for (int id = 0; id < lat.node_count(); ++id) {
    if (lat.rank_of(id) != n - lat.node(id).block_count()) {
      return Outcome::fail("rank function mismatch");
    }
  }
  for (auto [lo, hi] : lat.cover_edges()) {
    if (lat.rank_of(hi) != lat.rank_of(lo) + 1 || !lat.node_leq(lo, hi)) {
      return Outcome::fail("cover edge violates the rank step");
    }
    if (!is_cover(ctx.p(), lat.node(lo), lat.node(hi))) {
      return Outcome::fail("cover edge rejected by the merge rule");
    }
  }
  if (n <= 5) {
    // Merge rule vs. order-theoretic covering vs. stored edges, all pairs.
    std::set<std::pair<int, int>> edges(lat.cover_edges().begin(),
                                        lat.cover_edges().end());
    for (int i = 0; i < lat.node_count(); ++i) {
      for (int j = 0; j < lat.node_count(); ++j) {
        if (i == j) continue;
        bool strictly_between = false;
        if (lat.node_leq(i, j)) {
          for (int k = 0; k < lat.node_count(); ++k) {
            if (k != i && k != j && lat.node_leq(i, k) && lat.node_leq(k, j)) {
              strictly_between = true;
              break;
            }
          }
        }
        const bool order_cover =
            lat.node_leq(i, j) && !strictly_between;
        const bool merge_cover = is_cover(ctx.p(), lat.node(i), lat.node(j));
        const bool edge = edges.count({i, j}) > 0;
        if (order_cover != merge_cover || merge_cover != edge) {
          return Outcome::fail("cover characterizations disagree");
        }
      }
    }
  }
  return Outcome::pass();
}

Outcome check_lattice_laws(Context& ctx) {
  if (ctx.n() > 5) return Outcome::skip();
  const OpLattice& lat = ctx.lattice;
  const Poset& p = ctx.p();
  const int k = lat.node_count();
  // Cache node-level meet/join tables for the law checks.
  std::vector<std::vector<int>> meet_id(k, std::vector<int>(k, -1));
  std::vector<std::vector<int>> join_id(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      meet_id[i][j] = lat.require_index(meet(p, lat.node(i), lat.node(j)));
      join_id[i][j] = lat.require_index(join(p, lat.node(i), lat.node(j)));
    }
  }
  for (int i = 0; i < k; ++i) {
    if (meet_id[i][i] != i || join_id[i][i] != i) {
      return Outcome::fail("meet/join not idempotent");
    }
    for (int j = 0; j < k; ++j) {
      if (meet_id[i][j] != meet_id[j][i] || join_id[i][j] != join_id[j][i]) {
        return Outcome::fail("meet/join not commutative");
      }
      if (join_id[i][meet_id[i][j]] != i || meet_id[i][join_id[i][j]] != i) {
        return Outcome::fail("absorption fails");
      }
      // glb / lub against the node order.
      const int m = meet_id[i][j];
      if (!lat.node_leq(m, i) || !lat.node_leq(m, j)) {
        return Outcome::fail("meet is not a lower bound");
      }
      const int u = join_id[i][j];
      if (!lat.node_leq(i, u) || !lat.node_leq(j, u)) {
        return Outcome::fail("join is not an upper bound");
      }
      for (int c = 0; c < k; ++c) {
        if (lat.node_leq(c, i) && lat.node_leq(c, j) && !lat.node_leq(c, m)) {
          return Outcome::fail("meet is not the greatest lower bound");
        }
        if (lat.node_leq(i, c) && lat.node_leq(j, c) && !lat.node_leq(u, c)) {
          return Outcome::fail("join is not the least upper bound");
        }
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int c = 0; c < k; ++c) {
        if (meet_id[meet_id[i][j]][c] != meet_id[i][meet_id[j][c]]) {
          return Outcome::fail("meet not associative");
        }
        if (join_id[join_id[i][j]][c] != join_id[i][join_id[j][c]]) {
          return Outcome::fail("join not associative");
        }
      }
    }
  }
  return Outcome::pass();
}

Outcome check_lattice_atoms(Context& ctx) {
  if (ctx.n() < 2) return Outcome::skip();
  std::vector<Partition> expected;
  for (int id = 0; id < ctx.lattice.node_count(); ++id) {
    if (ctx.lattice.rank_of(id) == 1) expected.push_back(ctx.lattice.node(id));
  }
  if (atoms(ctx.p()) != expected) {
    return Outcome::fail("atom list differs from rank-1 lattice nodes");
  }
  return Outcome::pass();
}

Outcome check_ext_kshift(Context& ctx) {
  if (ctx.n() > 5) return Outcome::skip();
  const auto& exts = ctx.exts;
  std::vector<std::vector<int>> cycles;
  cycles.reserve(exts.size());
  for (const auto& f : exts) cycles.push_back(action_cycle(f));
  for (std::size_t i = 0; i < exts.size(); ++i) {
    for (std::size_t j = 0; j < exts.size(); ++j) {
      bool same_action = cycles[i] == cycles[j];
      bool shifted = false;
      for (int k = 0; k < ctx.n() && !shifted; ++k) {
        auto f = shift_extension(ctx.p(), exts[j], k);
        if (f && f->rank == exts[i].rank) shifted = true;
      }
      if (same_action != shifted) {
        return Outcome::fail("shift characterization of equal actions fails");
      }
    }
  }
  return Outcome::pass();
}

Outcome check_ext_connectivity(Context& ctx) {
  const bool counts_equal = ctx.exts.size() == ctx.classes.size();
  if (ctx.p().connected() != counts_equal) {
    std::ostringstream msg;
    msg << "connected=" << ctx.p().connected() << " but e=" << ctx.exts.size()
        << ", eC=" << ctx.classes.size();
    return Outcome::fail(msg.str());
  }
  return Outcome::pass();
}

Outcome check_ext_shift_di(Context& ctx) {
  if (ctx.n() > 6) return Outcome::skip();
  for (const auto& f : ctx.exts) {
    int valid = 0;
    for (int k = 0; k < ctx.n(); ++k) {
      if (shift_extension(ctx.p(), f, k)) ++valid;
    }
    if (valid != detanglement_index(pword_of(ctx.p(), f))) {
      return Outcome::fail("valid shift count differs from word index");
    }
  }
  return Outcome::pass();
}

Outcome check_ext_cycequiv(Context& ctx) {
  if (ctx.n() > 5) return Outcome::skip();
  const auto& exts = ctx.exts;
  for (int a : ctx.p().minimal_elements()) {
    std::vector<std::pair<Partition, std::vector<int>>> contracted;
    for (const auto& f : exts) {
      auto [pi, fa] = contract(ctx.p(), f, a);
      contracted.emplace_back(std::move(pi), action_cycle(fa));
    }
    for (std::size_t i = 0; i < exts.size(); ++i) {
      for (std::size_t j = i + 1; j < exts.size(); ++j) {
        const bool equivalent =
            action_cycle(exts[i]) == action_cycle(exts[j]);
        const bool contracted_equivalent = contracted[i] == contracted[j];
        if (equivalent != contracted_equivalent) {
          return Outcome::fail("contraction does not preserve equivalence");
        }
      }
    }
  }
  return Outcome::pass();
}

Outcome check_ext_roundtrip(Context& ctx) {
  if (ctx.n() > 5) return Outcome::skip();
  for (const auto& f : ctx.exts) {
    for (int a : ctx.p().minimal_elements()) {
      auto [pi, g] = contract(ctx.p(), f, a);
      const auto& merged = pi.blocks()[pi.block_of(a)];
      const int b = merged[0] == a ? merged[1] : merged[0];
      const LinearExtension rebuilt = expand(ctx.p(), a, b, g);
      auto [pi2, g2] = contract(ctx.p(), rebuilt, a);
      if (pi2 != pi || g2.rank != g.rank) {
        return Outcome::fail("contract(expand(g)) differs from g");
      }
      if (f.rank[a] < ctx.n() - 1) {
        // a and its successor sit adjacently, so expansion inverts exactly.
        if (rebuilt.rank != f.rank) {
          return Outcome::fail("expand(contract(f)) differs from f");
        }
      } else if (action_cycle(rebuilt) != action_cycle(f)) {
        // Wrapped pair: expansion returns the adjacent representative of
        // the same cyclic class.
        return Outcome::fail("wraparound roundtrip leaves the cyclic class");
      }
    }
  }
  return Outcome::pass();
}

Outcome check_ext_surjectivity(Context& ctx) {
  if (ctx.n() > 5) return Outcome::skip();
  const Poset& p = ctx.p();
  for (int a : p.minimal_elements()) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> image;
    for (const auto& f : ctx.exts) {
      auto [pi, g] = contract(p, f, a);
      image.emplace(pi.rgs(), g.rank);
    }
    for (int b = 0; b < p.size(); ++b) {
      if (b == a) continue;
      const Partition atom = Partition::merge_pair(p.size(), a, b);
      if (!is_order_congruence(p, atom)) continue;
      const Poset q = quotient_poset(p, atom);
      for (const auto& g : linear_extensions(q)) {
        if (!image.count({atom.rgs(), g.rank})) {
          return Outcome::fail("extension of a quotient missed by contraction");
        }
        const LinearExtension f = expand(p, a, b, g);
        if (!is_linear_extension(p, f.rank) || oplus(f, a, 1) != b) {
          return Outcome::fail("expanded map is not a valid section");
        }
      }
    }
  }
  return Outcome::pass();
}

Outcome check_ext_recurrence(Context& ctx) {
  if (ctx.n() < 2) return Outcome::skip();
  const Poset& p = ctx.p();
  const int a = p.minimal_elements()[0];
  std::size_t total = 0;
  for (int b = 0; b < p.size(); ++b) {
    if (b == a) continue;
    const Partition atom = Partition::merge_pair(p.size(), a, b);
    if (!is_order_congruence(p, atom)) continue;
    total += cyclic_classes(quotient_poset(p, atom)).size();
  }
  if (total != ctx.classes.size()) {
    return Outcome::fail("class count recurrence over atom quotients fails");
  }
  return Outcome::pass();
}

// Definitional detanglement test: split w along L, require pairwise
// letter-disjoint segments.
bool detangles_by_definition(const PWord& w, const Composition& L) {
  std::vector<std::uint64_t> segment_masks;
  int pos = 0;
  for (int part : L.parts) {
    std::uint64_t mask = 0;
    for (int i = 0; i < part; ++i) {
      mask |= std::uint64_t{1} << (w.letters[pos + i] - 1);
    }
    segment_masks.push_back(mask);
    pos += part;
  }
  for (std::size_t i = 0; i < segment_masks.size(); ++i) {
    for (std::size_t j = i + 1; j < segment_masks.size(); ++j) {
      if (segment_masks[i] & segment_masks[j]) return false;
    }
  }
  return true;
}

Outcome check_words_filter(Context& ctx) {
  if (ctx.n() > 6) return Outcome::skip();
  const auto comps = ctx.p().connected_components();
  std::vector<int> letters;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    letters.insert(letters.end(), comps[i].size(), static_cast<int>(i) + 1);
  }
  std::sort(letters.begin(), letters.end());
  const std::vector<Composition> all = all_compositions(ctx.n());
  do {
    PWord w{letters};
    std::vector<bool> member(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      member[i] = is_detanglement(w, all[i]);
      if (member[i] != detangles_by_definition(w, all[i])) {
        return Outcome::fail("cut characterization disagrees with definition");
      }
    }
    // Contains the one-part composition; up-closed; meet-closed.
    const Composition trivial{std::vector<int>{ctx.n()}};
    if (!is_detanglement(w, trivial)) {
      return Outcome::fail("trivial composition is not a detanglement");
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!member[i]) continue;
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (refines(all[i], all[j]) && !member[j] && member[i]) {
          return Outcome::fail("detanglement family is not up-closed");
        }
        if (member[j]) {
          std::vector<int> cuts = all[i].cuts();
          for (int cut : all[j].cuts()) cuts.push_back(cut);
          std::sort(cuts.begin(), cuts.end());
          cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
          const Composition common_refinement =
              Composition::from_cuts(ctx.n(), cuts);
          if (!is_detanglement(w, common_refinement)) {
            return Outcome::fail("detanglement family is not meet-closed");
          }
        }
      }
    }
    const Composition finest = finest_detanglement(w);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (member[i] && !refines(finest, all[i])) {
        return Outcome::fail("finest detanglement does not refine a member");
      }
    }
    if (detanglement_index(w) != finest.part_count()) {
      return Outcome::fail("index differs from finest part count");
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  return Outcome::pass();
}

Outcome check_words_counts(Context& ctx) {
  const Poset& p = ctx.p();
  if (e_by_components(p) != BigInt(ctx.exts.size())) {
    return Outcome::fail("component product count differs from enumeration");
  }
  BigInt ec;
  try {
    ec = e_C_by_words(p);
  } catch (const InternalError& e) {
    return Outcome::fail(e.what());
  }
  if (ec != BigInt(ctx.classes.size())) {
    return Outcome::fail("word-based class count differs from enumeration");
  }
  const auto comps = p.connected_components();
  const int m = static_cast<int>(comps.size());
  std::vector<int> sizes;
  for (const auto& comp : comps) sizes.push_back(static_cast<int>(comp.size()));
  BigInt total = 0;
  for (int t = 1; t <= m; ++t) total += count_U(p, t);
  if (total != multinomial(p.size(), sizes)) {
    return Outcome::fail("word counts by index do not sum to all words");
  }
  bool equal_sizes = true;
  for (int size : sizes) {
    if (size != sizes[0]) equal_sizes = false;
  }
  if (equal_sizes) {
    for (int t = 1; t <= m; ++t) {
      if (count_U_by_formula(m, sizes[0], t) !=
          count_U_by_enumeration(p, t)) {
        return Outcome::fail("closed form disagrees with enumeration");
      }
    }
  }
  return Outcome::pass();
}

Outcome check_topology_wedge(Context& ctx) {
  if (ctx.n() < 3) return Outcome::skip();
  if (ctx.lattice.node_count() > ctx.options.node_cap) return Outcome::skip();
  const Poset& p = ctx.p();
  const OpLattice& lat = ctx.lattice;

  const AbstractComplex complex = order_complex(lat);
  const MorseMatching matching = build_matching(p, lat);
  if (!verify_matching(FacePoset(complex), matching)) {
    return Outcome::fail("matching fails the acyclicity conditions");
  }
  if (2 * matching.pairs.size() + matching.critical.size() !=
      complex.face_count()) {
    return Outcome::fail("matching does not cover the face poset");
  }

  const HomologyReport homology = reduced_homology(complex);
  const BigInt recurrence = spheres_by_recurrence(p);
  const BigInt e_c(ctx.classes.size());
  const int d = ctx.n() - 3;

  if (recurrence != e_c) {
    return Outcome::fail("recurrence count differs from class count");
  }
  if (BigInt(matching.critical.size()) != e_c) {
    return Outcome::fail("critical cell count differs from class count");
  }
  for (const Face& f : matching.critical) {
    if (static_cast<int>(f.size()) - 1 != d) {
      return Outcome::fail("critical cell has unexpected dimension");
    }
  }
  if (BigInt(homology.betti_at(d)) != e_c) {
    return Outcome::fail("top Betti number differs from class count");
  }
  for (int dim = -1; dim <= homology.top_dim; ++dim) {
    if (dim != d && homology.betti_at(dim) != 0) {
      return Outcome::fail("reduced homology not concentrated in one degree");
    }
  }
  if (!homology.torsion_free()) {
    return Outcome::fail("torsion found in some dimension");
  }

  // Euler characteristic, empty face excluded.
  BigInt euler = 0;
  for (int dim = 0; dim <= complex.top_dim(); ++dim) {
    const BigInt count(complex.faces_of_dim(dim).size());
    euler += dim % 2 == 0 ? count : -count;
  }
  const BigInt expected = 1 + (d % 2 == 0 ? e_c : -e_c);
  if (euler != expected) {
    return Outcome::fail("Euler characteristic mismatch");
  }

  if (!homotopy_report(p, lat).agree) {
    return Outcome::fail("consolidated report flags a disagreement");
  }
  return Outcome::pass();
}

// Independence of the recurrence from the choice of minimal element.
Outcome check_recurrence_minimal_choice(Context& ctx) {
  if (ctx.n() < 4 || ctx.n() > 5) return Outcome::skip();
  const Poset& p = ctx.p();
  const BigInt reference = spheres_by_recurrence(p);
  for (int a : p.minimal_elements()) {
    BigInt total = 0;
    for (int b = 0; b < p.size(); ++b) {
      if (b == a) continue;
      const Partition atom = Partition::merge_pair(p.size(), a, b);
      if (!is_order_congruence(p, atom)) continue;
      total += spheres_by_recurrence(quotient_poset(p, atom));
    }
    if (total != reference) {
      return Outcome::fail("recurrence depends on the minimal element");
    }
  }
  return Outcome::pass();
}

using CheckFn = std::function<Outcome(Context&)>;

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"poset-axioms", check_poset_axioms},
      {"congruence-routes", check_congruence_routes},
      {"congruence-convexity", check_congruence_convexity},
      {"quotient-kernel", check_quotient_kernel},
      {"lattice-shape", check_lattice_shape},
      {"lattice-laws", check_lattice_laws},
      {"lattice-atoms", check_lattice_atoms},
      {"ext-kshift", check_ext_kshift},
      {"ext-connectivity", check_ext_connectivity},
      {"ext-shift-di", check_ext_shift_di},
      {"ext-cycequiv", check_ext_cycequiv},
      {"ext-roundtrip", check_ext_roundtrip},
      {"ext-surjectivity", check_ext_surjectivity},
      {"ext-recurrence", check_ext_recurrence},
      {"words-filter", check_words_filter},
      {"words-counts", check_words_counts},
      {"topology-wedge", check_topology_wedge},
      {"recurrence-minimal-choice", check_recurrence_minimal_choice},
  };
  return table;
}

}  // namespace

std::vector<Instance> named_fixtures(int n_max) {
  std::vector<Instance> out;
  for (int n = 3; n <= n_max; ++n) {
    out.push_back({"chain-" + std::to_string(n), fixtures::chain(n)});
    out.push_back({"antichain-" + std::to_string(n), fixtures::antichain(n)});
  }
  // The remaining 3-element shapes, so n_max = 3 already covers all five.
  for (auto& [name, p] : fixtures::three_element_posets()) {
    if (name == "vee" || name == "wedge") out.push_back({name, p});
  }
  out.push_back({"chain-plus-point", fixtures::chain_plus_point()});
  if (n_max >= 4) {
    out.push_back({"b2", fixtures::boolean_b2()});
    out.push_back({"two-2-chains", fixtures::two_two_chains()});
  }
  return out;
}

std::vector<Instance> random_instances(int n_max, int trials,
                                       std::uint64_t seed) {
  static constexpr double kDensities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  std::vector<Instance> out;
  for (int n = 3; n <= n_max; ++n) {
    for (int i = 0; i < trials; ++i) {
      const double density = kDensities[i % 5];
      const std::uint64_t instance_seed =
          seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(n) * 1000003u +
          static_cast<std::uint64_t>(i);
      std::ostringstream name;
      name << "random-n" << n << "-i" << i;
      out.push_back({name.str(), random_poset(n, density, instance_seed)});
    }
  }
  return out;
}

bool Report::ok() const {
  for (const CheckStat& stat : checks) {
    if (stat.failures > 0) return false;
  }
  return true;
}

Report run(const Options& options, std::ostream* log) {
  Report report;
  for (const auto& [name, fn] : check_table()) {
    report.checks.push_back(CheckStat{name});
  }

  std::vector<Instance> instances = named_fixtures(options.n_max);
  for (Instance& inst :
       random_instances(options.n_max, options.trials, options.seed)) {
    instances.push_back(std::move(inst));
  }

  for (const Instance& inst : instances) {
    Context ctx(inst, options);
    const auto& table = check_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
      Outcome outcome;
      try {
        outcome = table[i].second(ctx);
      } catch (const std::exception& e) {
        outcome = Outcome::fail(std::string("exception: ") + e.what());
      }
      CheckStat& stat = report.checks[i];
      switch (outcome.kind) {
        case Outcome::Pass:
          ++stat.passes;
          break;
        case Outcome::Skip:
          ++stat.skips;
          break;
        case Outcome::Fail:
          ++stat.failures;
          if (stat.first_failure.empty()) {
            stat.first_failure = outcome.message;
            stat.first_failure_instance = inst.name;
          }
          if (report.repro_json.empty()) {
            nlohmann::json repro;
            repro["instance"] = inst.name;
            repro["invariant"] = table[i].first;
            repro["message"] = outcome.message;
            repro["poset"] = poset_to_json(inst.poset);
            report.repro_json = dump_sorted(repro);
            report.repro_instance = inst.name;
          }
          if (log) {
            *log << "FAIL " << table[i].first << " on " << inst.name << ": "
                 << outcome.message << "\n";
          }
          break;
      }
    }
    if (log) {
      *log << "checked " << inst.name << " (n=" << inst.poset.size()
           << ", lattice=" << ctx.lattice.node_count() << ")\n";
    }
  }
  return report;
}

}  // namespace ordpart::verify
