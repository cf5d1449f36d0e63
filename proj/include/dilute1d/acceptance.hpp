#ifndef DILUTE1D_ACCEPTANCE_HPP
#define DILUTE1D_ACCEPTANCE_HPP

#include <json.hpp>
#include <string>
#include <vector>

namespace dilute1d::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the full verification suite. Deterministic for a fixed seed.
std::vector<CriterionResult> run_all(unsigned seed);

nlohmann::ordered_json report_json(const std::vector<CriterionResult>& results,
                                   unsigned seed);

}  // namespace dilute1d::acceptance

#endif
