#include <doctest.h>

#include <set>

#include "ordpart/verify.hpp"

using namespace ordpart;

TEST_CASE("named fixtures cover the expected shapes") {
  const auto three = verify::named_fixtures(3);
  std::set<std::string> names;
  for (const auto& inst : three) names.insert(inst.name);
  CHECK(names.count("chain-3"));
  CHECK(names.count("antichain-3"));
  CHECK(names.count("vee"));
  CHECK(names.count("wedge"));
  CHECK(names.count("chain-plus-point"));

  const auto six = verify::named_fixtures(6);
  std::set<std::string> more;
  for (const auto& inst : six) more.insert(inst.name);
  CHECK(more.count("b2"));
  CHECK(more.count("two-2-chains"));
  CHECK(more.count("antichain-6"));
}

TEST_CASE("random instances are seeded and sized as requested") {
  const auto a = verify::random_instances(5, 3, 11);
  const auto b = verify::random_instances(5, 3, 11);
  REQUIRE(a.size() == 9);  // 3 per size for n = 3, 4, 5
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].poset.relation() == b[i].poset.relation());
    CHECK(a[i].poset.size() >= 3);
    CHECK(a[i].poset.size() <= 5);
  }
  const auto c = verify::random_instances(5, 3, 12);
  bool any_difference = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].poset.relation() == c[i].poset.relation())) {
      any_difference = true;
    }
  }
  CHECK(any_difference);
}

TEST_CASE("the suite passes on a small catalog") {
  verify::Options options;
  options.n_max = 4;
  options.trials = 3;
  options.seed = 5;
  const verify::Report report = verify::run(options);
  CHECK(report.ok());
  CHECK(report.repro_json.empty());
  CHECK(report.checks.size() >= 15);
  std::set<std::string> names;
  for (const auto& stat : report.checks) {
    CHECK(names.insert(stat.name).second);  // unique invariant names
    CHECK(stat.failures == 0);
    CHECK(stat.passes + stat.skips > 0);
  }
}
