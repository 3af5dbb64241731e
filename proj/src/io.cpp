#include "ordpart/io.hpp"

#include <fstream>
#include <sstream>

namespace ordpart {

using nlohmann::json;

Poset poset_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("poset JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("poset JSON needs an integer field \"n\"");
  }
  CoverList covers;
  covers.n = j["n"].get<int>();
  if (covers.n < 0) throw ParseError("\"n\" must be nonnegative");
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw ParseError("\"covers\" must be an array");
    for (const auto& pair : j["covers"]) {
      if (!pair.is_array() || pair.size() != 2 ||
          !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        throw ParseError("each cover must be an integer pair [low, high]");
      }
      covers.covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array()) throw ParseError("\"names\" must be an array");
    for (const auto& name : j["names"]) {
      if (!name.is_string()) throw ParseError("names must be strings");
      names.push_back(name.get<std::string>());
    }
    if (static_cast<int>(names.size()) != covers.n) {
      throw ParseError("\"names\" length must equal \"n\"");
    }
  }
  return Poset::from_covers(covers, std::move(names));
}

Poset poset_from_string(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return poset_from_json(j);
}

Poset poset_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return poset_from_string(buffer.str());
}

json poset_to_json(const Poset& p) {
  json j;
  j["n"] = p.size();
  j["covers"] = json::array();
  for (auto [x, y] : p.cover_pairs()) j["covers"].push_back({x, y});
  if (!p.names().empty()) j["names"] = p.names();
  return j;
}

Partition partition_from_json(const json& j, int ground_size) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
    throw ParseError("partition JSON needs a \"blocks\" array");
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& block : j["blocks"]) {
    if (!block.is_array()) throw ParseError("each block must be an array");
    std::vector<int> members;
    for (const auto& x : block) {
      if (!x.is_number_integer()) throw ParseError("elements must be integers");
      members.push_back(x.get<int>());
    }
    blocks.push_back(std::move(members));
  }
  try {
    return Partition::from_blocks(ground_size, std::move(blocks));
  } catch (const PartitionError& e) {
    throw ParseError(std::string("invalid partition: ") + e.what());
  }
}

json partition_to_json(const Partition& pi) {
  json blocks = json::array();
  for (const auto& block : pi.blocks()) blocks.push_back(block);
  return json{{"blocks", blocks}};
}

json lattice_to_json(const OpLattice& lattice) {
  json nodes = json::array();
  for (int id = 0; id < lattice.node_count(); ++id) {
    json node;
    node["blocks"] = json::array();
    for (const auto& block : lattice.node(id).blocks()) {
      node["blocks"].push_back(block);
    }
    node["rank"] = lattice.rank_of(id);
    nodes.push_back(std::move(node));
  }
  json covers = json::array();
  for (auto [lo, hi] : lattice.cover_edges()) covers.push_back({lo, hi});
  return json{{"nodes", nodes}, {"covers", covers}};
}

std::string lattice_to_dot(const OpLattice& lattice) {
  std::ostringstream out;
  out << "digraph oplattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int id = 0; id < lattice.node_count(); ++id) {
    std::string label = lattice.node(id).to_string(&lattice.base());
    std::string escaped;
    for (char ch : label) {
      if (ch == '"' || ch == '\\') escaped += '\\';
      escaped += ch;
    }
    out << "  n" << id << " [label=\"" << escaped << "\"];\n";
  }
  for (auto [lo, hi] : lattice.cover_edges()) {
    out << "  n" << lo << " -> n" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

json extension_to_json(const LinearExtension& f) {
  return json{{"f", f.rank}};
}

json cyclic_class_to_json(const CyclicClass& cls) {
  json members = json::array();
  for (const auto& f : cls.members) members.push_back(f.rank);
  return json{{"cycle", cls.cycle}, {"members", members}};
}

json bigint_to_json(const BigInt& value) {
  if (value.fits_slong_p()) {
    return json(static_cast<std::int64_t>(value.get_si()));
  }
  return json(value.get_str());
}

json report_to_json(const HomotopyReport& report) {
  json j;
  j["n"] = report.n;
  j["eC"] = bigint_to_json(report.cyclic_extensions);
  j["recurrence"] = bigint_to_json(report.recurrence);
  j["critical"] = json{{"count", report.critical_count},
                       {"dims", report.critical_dims}};
  j["betti"] = report.homology.betti;
  json torsion = json::array();
  for (const auto& factors : report.homology.torsion) {
    json dim_factors = json::array();
    for (const BigInt& d : factors) dim_factors.push_back(bigint_to_json(d));
    torsion.push_back(std::move(dim_factors));
  }
  j["torsion"] = std::move(torsion);
  j["agree"] = report.agree;
  return j;
}

std::string dump_sorted(const json& j) {
  // nlohmann's default object storage is a sorted map, so dumping is
  // already key-sorted and deterministic.
  return j.dump(2) + "\n";
}

}  // namespace ordpart
