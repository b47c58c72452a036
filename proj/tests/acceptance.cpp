// Acceptance gate: one pass/fail line per criterion, zero tolerance.
// Exit status is the number of failed criteria.

#include "pxmod/theorems.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace pxmod;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::size_t fails = 0;
  double seconds = 0.0;
  std::string witness;
};

Outcome tally(const std::vector<TheoremReport>& rs) {
  Outcome o;
  for (const auto& r : rs) {
    ++o.checks;
    o.seconds += r.seconds;
    if (!r.pass) {
      ++o.fails;
      if (o.witness.empty())
        o.witness = r.check + " on " + r.instance + ": " + r.witness;
    }
  }
  return o;
}

int verdict(int n, const char* what, bool pass, const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", n, what,
              detail.c_str());
  std::fflush(stdout);
  return pass ? 0 : 1;
}

std::string fmt(const Outcome& o) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu checks, %zu failures, %.1fs", o.checks, o.fails,
                o.seconds);
  std::string s = buf;
  if (!o.witness.empty()) s += " | first: " + o.witness;
  return s;
}

}  // namespace

int main() {
  CheckConfig cfg;
  cfg.seed = 2024;
  cfg.max_order = 16;
  cfg.max_dim = 4;
  cfg.variety = "mixed";
  cfg.count = 100;  // 100 random group + 100 random algebra instances

  int failures = 0;

  {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<TheoremReport> rs;
    check_characterization(rs, cfg);
    double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome o = tally(rs);
    bool pass = o.fails == 0 && o.checks >= 200 && wall < 60.0;
    char extra[64];
    std::snprintf(extra, sizeof extra, " (wall %.1fs, budget 60s)", wall);
    failures += verdict(1, "crossed iff trivial Peiffer commutator", pass,
                        fmt(o) + extra);
  }
  {
    std::vector<TheoremReport> rs;
    check_reflection(rs, cfg);
    Outcome o = tally(rs);
    failures += verdict(2, "reflection onto crossed modules + universal property",
                        o.fails == 0 && o.checks >= 200, fmt(o));
  }
  {
    std::vector<TheoremReport> rs;
    check_coproduct(rs, cfg);
    Outcome o = tally(rs);
    failures += verdict(3, "coproduct of crossed modules + unique mediators",
                        o.fails == 0 && o.checks >= 50, fmt(o));
  }
  {
    std::vector<TheoremReport> rs;
    check_degenerations(rs, cfg);
    std::map<std::string, std::size_t> per_check;
    for (const auto& r : rs) ++per_check[r.check];
    bool enough = per_check.size() == 3;
    for (const auto& [k, n] : per_check) enough = enough && n >= 20;
    Outcome o = tally(rs);
    failures += verdict(4, "degenerations to classical commutators and products",
                        o.fails == 0 && enough, fmt(o));
  }
  {
    std::vector<TheoremReport> rs;
    check_corollaries(rs, cfg);
    Outcome o = tally(rs);
    // five corollary checks per triple
    failures += verdict(5, "monotonicity, vanishing and epi/mono corollaries",
                        o.fails == 0 && o.checks >= 500, fmt(o));
  }
  {
    std::vector<TheoremReport> rs;
    check_product_consistency(rs, cfg);
    Outcome o = tally(rs);
    failures += verdict(6, "conjugation realization + product symmetry",
                        o.fails == 0 && o.checks >= 40, fmt(o));
  }
  {
    std::vector<TheoremReport> rs;
    check_worked_examples(rs, cfg);
    Outcome o = tally(rs);
    failures += verdict(7, "worked examples reproduce exactly",
                        o.fails == 0 && o.checks == 2, fmt(o));
  }

  return failures;
}
