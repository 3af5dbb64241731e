#ifndef ORDPART_VERIFY_HPP
#define ORDPART_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ordpart/poset.hpp"

namespace ordpart::verify {

struct Options {
  int n_max = 5;
  int trials = 50;
  std::uint64_t seed = 1;
  // Homotopy cross-checks skip instances whose lattice exceeds this many
  // nodes; skips are counted, not failed.
  int node_cap = 250;
};

struct Instance {
  std::string name;
  Poset poset;
};

/// Chains and antichains up to n_max, B2, chain-plus-point, two 2-chains.
std::vector<Instance> named_fixtures(int n_max);

/// trials random posets per size 3..n_max; seeds derive from (seed, n, i).
std::vector<Instance> random_instances(int n_max, int trials,
                                       std::uint64_t seed);

struct CheckStat {
  std::string name;
  long passes = 0;
  long failures = 0;
  long skips = 0;
  std::string first_failure;           // human-readable description
  std::string first_failure_instance;  // instance name
};

struct Report {
  std::vector<CheckStat> checks;
  bool ok() const;
  // Poset JSON of the first failing instance, for reproduction.
  std::string repro_json;
  std::string repro_instance;
};

/// Run every module invariant over the named fixtures plus seeded random
/// posets. Progress lines go to `log` when given.
Report run(const Options& options, std::ostream* log = nullptr);

}  // namespace ordpart::verify

#endif
