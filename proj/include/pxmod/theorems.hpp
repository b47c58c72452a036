#ifndef PXMOD_THEOREMS_HPP
#define PXMOD_THEOREMS_HPP

#include "pxmod/catalog.hpp"
#include "pxmod/peiffer.hpp"

#include <string>
#include <vector>

namespace pxmod {

/// One verdict of a named property check on a named instance.
struct TheoremReport {
  std::string check;
  std::string instance;
  bool pass = false;
  std::string witness;  // empty on pass; a serialized counterexample otherwise
  double seconds = 0.0;
};

struct CheckConfig {
  std::uint64_t seed = 0;
  std::size_t max_order = 16;
  std::size_t max_dim = 4;
  std::string variety = "mixed";  // "group" | "assoc" | "leibniz" | "mixed"
  std::size_t count = 60;         // random instances per variety
  bool corrupt = false;           // inject a broken instance (negative path)
};

/// JSON-lines record. Wall time is deliberately not serialized so that
/// identical seed + config give identical report bytes.
std::string report_line(const TheoremReport& r);

// The individual suites. Each appends one report per (check, instance).
void check_characterization(std::vector<TheoremReport>& out, const CheckConfig& cfg);
void check_reflection(std::vector<TheoremReport>& out, const CheckConfig& cfg);
void check_coproduct(std::vector<TheoremReport>& out, const CheckConfig& cfg);
void check_degenerations(std::vector<TheoremReport>& out, const CheckConfig& cfg);
void check_corollaries(std::vector<TheoremReport>& out, const CheckConfig& cfg);
void check_product_consistency(std::vector<TheoremReport>& out, const CheckConfig& cfg);
void check_worked_examples(std::vector<TheoremReport>& out, const CheckConfig& cfg);

std::vector<TheoremReport> run_theorem_checks(const CheckConfig& cfg);

}  // namespace pxmod

#endif
