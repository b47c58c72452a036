#include "doctest.h"
#include "pxmod/theorems.hpp"

#include <sstream>

using namespace pxmod;

namespace {
std::string serialize(const std::vector<TheoremReport>& rs) {
  std::ostringstream os;
  for (const auto& r : rs) os << report_line(r) << "\n";
  return os.str();
}
}  // namespace

TEST_CASE("the default configuration passes every check") {
  CheckConfig cfg;
  cfg.max_order = 8;
  cfg.max_dim = 1;  // keeps the coproduct enumeration small for a unit run
  cfg.count = 12;
  auto rs = run_theorem_checks(cfg);
  CHECK(rs.size() > 100);
  for (const auto& r : rs) {
    INFO(r.check, " on ", r.instance, ": ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("identical seed and configuration give identical report bytes") {
  CheckConfig cfg;
  cfg.seed = 5;
  cfg.max_order = 8;
  cfg.max_dim = 1;
  cfg.count = 8;
  CHECK(serialize(run_theorem_checks(cfg)) == serialize(run_theorem_checks(cfg)));
  CheckConfig other = cfg;
  other.seed = 6;
  CHECK(serialize(run_theorem_checks(cfg)) != serialize(run_theorem_checks(other)));
}

TEST_CASE("an injected broken instance is reported as a failure with a witness") {
  CheckConfig cfg;
  cfg.max_order = 4;
  cfg.max_dim = 1;
  cfg.count = 2;
  cfg.corrupt = true;
  std::vector<TheoremReport> rs;
  check_characterization(rs, cfg);
  bool failed = false;
  for (const auto& r : rs)
    if (r.instance.substr(0, 9) == "corrupted") {
      failed = !r.pass && !r.witness.empty();
    }
  CHECK(failed);
}

TEST_CASE("variety filter restricts the instances examined") {
  CheckConfig cfg;
  cfg.max_order = 4;
  cfg.max_dim = 2;
  cfg.count = 4;
  cfg.variety = "group";
  std::vector<TheoremReport> rs;
  check_characterization(rs, cfg);
  CHECK(!rs.empty());
  cfg.variety = "leibniz";
  std::vector<TheoremReport> ls;
  check_characterization(ls, cfg);
  CHECK(!ls.empty());
}
