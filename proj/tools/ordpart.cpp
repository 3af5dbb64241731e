// ordpart: order-preserving partition lattices, their order-complex sphere
// counts, and linear/cyclic extension combinatorics.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordpart/extensions.hpp"
#include "ordpart/fixtures.hpp"
#include "ordpart/io.hpp"
#include "ordpart/oplattice.hpp"
#include "ordpart/topology.hpp"
#include "ordpart/verify.hpp"
#include "ordpart/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitAxiom = 3;
constexpr int kExitDisagreement = 4;

ordpart::Poset load_poset(const std::string& input) {
  if (!input.empty() && input.front() == '{') {
    return ordpart::poset_from_string(input);
  }
  return ordpart::poset_from_file(input);
}

std::string structure_summary(const ordpart::Poset& p) {
  const int n = p.size();
  const auto components = p.connected_components();
  const auto minimal = p.minimal_elements();

  bool is_chain = true, is_antichain = true;
  for (int x = 0; x < n && (is_chain || is_antichain); ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (p.comparable(x, y)) {
        is_antichain = false;
      } else {
        is_chain = false;
      }
    }
  }
  std::ostringstream out;
  out << "n=" << n << ", ";
  if (n >= 2 && is_antichain) {
    out << "antichain";
  } else if (n >= 2 && is_chain) {
    out << "chain";
  } else if (components.size() == 1) {
    out << "connected";
  } else {
    out << "disconnected (" << components.size() << " components)";
  }
  out << ", " << minimal.size() << " minimal element"
      << (minimal.size() == 1 ? "" : "s");
  return out.str();
}

int cmd_validate(const std::string& input) {
  const ordpart::Poset p = load_poset(input);
  std::cout << structure_summary(p) << "\n";
  return kExitOk;
}

int cmd_lattice(const std::string& input, bool dot) {
  const ordpart::Poset p = load_poset(input);
  const ordpart::OpLattice lattice = ordpart::enumerate_oplattice(p);
  if (dot) {
    std::cout << ordpart::lattice_to_dot(lattice);
  } else {
    std::cout << ordpart::dump_sorted(ordpart::lattice_to_json(lattice));
  }
  return kExitOk;
}

int cmd_spheres(const std::string& input, const std::string& method) {
  const ordpart::Poset p = load_poset(input);
  nlohmann::json j;
  j["n"] = p.size();
  j["method"] = method;
  if (method == "all") {
    const ordpart::HomotopyReport report = ordpart::homotopy_report(p);
    std::cout << ordpart::dump_sorted(ordpart::report_to_json(report));
    return report.agree ? kExitOk : kExitDisagreement;
  }
  if (method == "recurrence") {
    j["count"] = ordpart::bigint_to_json(ordpart::spheres_by_recurrence(p));
    j["dim"] = p.size() - 3;
  } else if (method == "morse") {
    const ordpart::MorseMatching m = ordpart::build_matching(p);
    j["count"] = static_cast<std::int64_t>(m.critical.size());
    std::set<int> dims;
    for (const auto& f : m.critical) {
      dims.insert(static_cast<int>(f.size()) - 1);
    }
    j["dims"] = std::vector<int>(dims.begin(), dims.end());
  } else {  // homology
    const ordpart::OpLattice lattice = ordpart::enumerate_oplattice(p);
    const ordpart::HomologyReport hom =
        ordpart::reduced_homology(ordpart::order_complex(lattice));
    j["betti"] = hom.betti;
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& factors : hom.torsion) {
      nlohmann::json fs = nlohmann::json::array();
      for (const auto& d : factors) fs.push_back(ordpart::bigint_to_json(d));
      torsion.push_back(std::move(fs));
    }
    j["torsion"] = std::move(torsion);
  }
  std::cout << ordpart::dump_sorted(j);
  return kExitOk;
}

int cmd_extensions(const std::string& input, bool cyclic) {
  const ordpart::Poset p = load_poset(input);
  const auto exts = ordpart::linear_extensions(p);
  const auto classes = ordpart::cyclic_classes(p);
  nlohmann::json j;
  j["e"] = static_cast<std::int64_t>(exts.size());
  j["eC"] = static_cast<std::int64_t>(classes.size());
  if (cyclic) {
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : classes) cls.push_back(ordpart::cyclic_class_to_json(c));
    j["classes"] = std::move(cls);
  }
  std::cout << ordpart::dump_sorted(j);
  return kExitOk;
}

int cmd_words_table(int m_max, int s_max) {
  std::cout << "m\\s";
  for (int s = 1; s <= s_max; ++s) std::cout << '\t' << s;
  std::cout << '\n';
  for (int m = 1; m <= m_max; ++m) {
    std::cout << m;
    const ordpart::Composition trivial{std::vector<int>{m}};
    for (int s = 1; s <= s_max; ++s) {
      std::cout << '\t' << ordpart::count_exact(m, s, trivial).get_str();
    }
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_words_word(const std::string& text) {
  if (text.empty()) throw ordpart::WordError("empty word");
  ordpart::PWord w;
  int max_letter = 0;
  for (char ch : text) {
    if (ch < '1' || ch > '9') {
      throw ordpart::WordError("word letters must be digits 1-9");
    }
    w.letters.push_back(ch - '0');
    max_letter = std::max(max_letter, ch - '0');
  }
  std::vector<bool> present(max_letter + 1, false);
  for (int letter : w.letters) present[letter] = true;
  for (int letter = 1; letter <= max_letter; ++letter) {
    if (!present[letter]) {
      throw ordpart::WordError("word letters must form a range 1..m");
    }
  }
  const ordpart::Composition finest = ordpart::finest_detanglement(w);
  std::cout << "(";
  for (int i = 0; i < finest.part_count(); ++i) {
    if (i) std::cout << ",";
    std::cout << finest.parts[i];
  }
  std::cout << "), di=" << ordpart::detanglement_index(w) << "\n";
  return kExitOk;
}

int cmd_verify(int n_max, int trials, std::uint64_t seed,
               const std::string& repro_path) {
  ordpart::verify::Options options;
  options.n_max = n_max;
  options.trials = trials;
  options.seed = seed;
  const ordpart::verify::Report report = ordpart::verify::run(options);
  for (const auto& stat : report.checks) {
    std::cout << stat.name << ": pass=" << stat.passes
              << " fail=" << stat.failures << " skip=" << stat.skips;
    if (stat.failures > 0) {
      std::cout << "  [first: " << stat.first_failure_instance << ": "
                << stat.first_failure << "]";
    }
    std::cout << "\n";
  }
  if (report.ok()) {
    std::cout << "all invariants hold\n";
    return kExitOk;
  }
  std::ofstream out(repro_path);
  out << report.repro_json;
  std::cout << "first failing instance written to " << repro_path << "\n";
  return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Order-preserving partition lattices: sphere counts, extensions, "
      "and word combinatorics"};
  app.require_subcommand(1);

  std::string input;
  auto* validate =
      app.add_subcommand("validate", "Parse a poset and report its structure");
  validate->add_option("input", input, "poset JSON file or inline JSON")
      ->required();

  bool dot = false, json_flag = false;
  auto* lattice = app.add_subcommand(
      "lattice", "Export the lattice of order-preserving partitions");
  lattice->add_option("input", input, "poset JSON file or inline JSON")
      ->required();
  lattice->add_flag("--dot", dot, "emit a DOT Hasse diagram");
  lattice->add_flag("--json", json_flag, "emit JSON (default)");

  std::string method = "all";
  auto* spheres = app.add_subcommand(
      "spheres", "Sphere count of the order complex of the proper lattice");
  spheres->add_option("input", input, "poset JSON file or inline JSON")
      ->required();
  spheres->add_option("--method", method, "recurrence|morse|homology|all")
      ->check(CLI::IsMember({"recurrence", "morse", "homology", "all"}));

  bool cyclic = false;
  auto* extensions = app.add_subcommand(
      "extensions", "Linear extension and cyclic extension counts");
  extensions->add_option("input", input, "poset JSON file or inline JSON")
      ->required();
  extensions->add_flag("--cyclic", cyclic, "list the cyclic classes");

  std::vector<int> table_args;
  std::string word_arg;
  auto* words = app.add_subcommand(
      "words", "Entangled-word table and detanglement of a single word");
  auto* table_opt = words->add_option(
      "--table", table_args, "emit the entangled-word table up to m_max s_max");
  table_opt->expected(2);
  auto* word_opt =
      words->add_option("--word", word_arg, "finest detanglement of a word");
  table_opt->excludes(word_opt);

  int n_max = 5, trials = 50;
  std::uint64_t seed = 1;
  std::string repro_path = "ordpart_verify_failure.json";
  auto* verify = app.add_subcommand(
      "verify", "Run the invariant suite over fixtures and random posets");
  verify->add_option("--n-max", n_max, "largest poset size (>= 3)")
      ->check(CLI::Range(3, 12));
  verify->add_option("--trials", trials, "random posets per size");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--repro-file", repro_path,
                     "where to write the first failing instance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return cmd_validate(input);
    if (app.got_subcommand(lattice)) return cmd_lattice(input, dot);
    if (app.got_subcommand(spheres)) return cmd_spheres(input, method);
    if (app.got_subcommand(extensions)) return cmd_extensions(input, cyclic);
    if (app.got_subcommand(words)) {
      if (!table_args.empty()) {
        return cmd_words_table(table_args[0], table_args[1]);
      }
      if (!word_arg.empty()) return cmd_words_word(word_arg);
      std::cerr << "words needs --table or --word\n";
      return kExitParse;
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(n_max, trials, seed, repro_path);
    }
  } catch (const ordpart::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ordpart::WordError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ordpart::InternalError& e) {
    std::cerr << "internal disagreement: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAxiom;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDisagreement;
  }
  return kExitOk;
}
