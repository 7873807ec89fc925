#pragma once

#include <string>

#include "gpi/codim.hpp"
#include "gpi/exponent.hpp"
#include "gpi/verify.hpp"

namespace gpi {

// All emitters are deterministic: identical inputs produce identical bytes.
std::string codim_json(const GroupSpec& g, const std::string& algebra,
                       const std::vector<CodimReport>& reports);
std::string codim_csv(const GroupSpec& g, const std::vector<CodimReport>& reports);

std::string exponent_json(const GradedAlgebra& a, const ExponentReport& rep);

std::string suite_json(const SuiteResult& r);
std::string suite_text(const SuiteResult& r);

}  // namespace gpi
