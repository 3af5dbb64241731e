#ifndef ORDPART_IO_HPP
#define ORDPART_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ordpart/congruence.hpp"
#include "ordpart/extensions.hpp"
#include "ordpart/oplattice.hpp"
#include "ordpart/poset.hpp"
#include "ordpart/topology.hpp"

namespace ordpart {

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Poset JSON: {"n": 4, "names": [...], "covers": [[low, high], ...]};
// names optional.
Poset poset_from_json(const nlohmann::json& j);
Poset poset_from_string(const std::string& text);
Poset poset_from_file(const std::string& path);
nlohmann::json poset_to_json(const Poset& p);

// Partition JSON: {"blocks": [[0,1],[2],[3]]}; canonical order on output.
Partition partition_from_json(const nlohmann::json& j, int ground_size);
nlohmann::json partition_to_json(const Partition& pi);

// Lattice JSON: {"covers": [[i,j],...], "nodes": [{"blocks":..,"rank":..}]}
nlohmann::json lattice_to_json(const OpLattice& lattice);
std::string lattice_to_dot(const OpLattice& lattice);

nlohmann::json extension_to_json(const LinearExtension& f);
nlohmann::json cyclic_class_to_json(const CyclicClass& cls);

// {"agree":.., "betti":[..], "critical":{..}, "eC":.., "n":..,
//  "recurrence":.., "torsion":[..]}; betti/torsion arrays start at
// dimension -1.
nlohmann::json report_to_json(const HomotopyReport& report);

// Counts that fit in 64 bits stay JSON numbers, larger ones decay to
// decimal strings.
nlohmann::json bigint_to_json(const BigInt& value);

std::string dump_sorted(const nlohmann::json& j);

}  // namespace ordpart

#endif
