#pragma once

#include <string>
#include <vector>

#include "gpi/budget.hpp"

namespace gpi {

struct CheckRecord {
  std::string id;
  std::string claim;
  std::string params;
  int bound = 0;  // degree bound, when applicable
  bool pass = false;
  std::string detail;  // witness or counterexample
};

struct SuiteResult {
  std::string suite;
  int effective_n = 0;
  bool pass = false;
  std::vector<CheckRecord> checks;
};

std::vector<std::string> suite_names();

// Suites: lemma3.2, lemma3.3, prop3.5, remark3.6, section4, prop5.4, thm5.1.
// max_degree is clamped per suite (each prints its effective bound); seed
// feeds randomized spot checks where a suite has any.
SuiteResult run_suite(const std::string& name, int max_degree, unsigned long seed, int jobs,
                      const BudgetGuard& guard = {});

}  // namespace gpi
