#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpi/algebra.hpp"

namespace gpi {

// A catalog object is the Grassmann envelope E(body) of its finite
// dimensional G x Z2-graded body (plain algebras carry a trivial odd part).
struct CatalogEntry {
  std::string id;  // normalized spec string, e.g. "A6(g,1,g)@Z2"
  GroupSpec group;
  GradedAlgebra body;
  std::optional<int> declared_exp;    // literature value, when stated
  std::optional<int> declared_delta;  // proper central exponent, when stated
};

// Builds from a spec string "NAME(args)@GROUP", e.g. "A6(g,1,g)@Z2",
// "A2(3)@Z3", "A5(1,1)@Z2xZ2", "A5(1,1,trivial)@Z2xZ2", "E@Z1", "Eb(g)@Z2",
// "B1(1,g)@Z4". The leading "catalog:" prefix is accepted and ignored.
// Every returned body passes validate_algebra and verify_wedderburn.
CatalogEntry catalog_build(const std::string& spec);

struct CatalogInfo {
  std::string id;
  std::string signature;
  std::string sample;  // a sample instantiation
  int sample_dim = 0;  // body dimension of the sample
  std::string description;
};

std::vector<CatalogInfo> catalog_list();

// A separating polynomial between two catalog objects, with machine-checkable
// verdicts: the polynomial is an identity of holds_in and not of fails_in.
struct WitnessEntry {
  std::string poly;      // grammar text, structural labels in the named group
  std::string holds_in;  // catalog spec string
  std::string fails_in;  // catalog spec string
  std::string note;
};

std::vector<WitnessEntry> witness_table();

}  // namespace gpi
