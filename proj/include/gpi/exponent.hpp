#pragma once

#include <optional>

#include "gpi/codim.hpp"

namespace gpi {

struct AdmissibilityCertificate {
  std::vector<int> components;  // ordered sequence of distinct component indices
  RatVec witness;               // nonzero vector of the chained product
  int total_dim = 0;
};

// Self-contained certificate for a centrally admissible component set: a
// polynomial all of whose evaluations are central, together with one nonzero
// evaluation whose assignment touches every listed component.
struct CentralWitness {
  int n = 0;
  DegreeTuple tuple;
  MultilinearPoly poly;
  std::vector<int> assignment;  // body basis index per position
  RatVec value;
  std::vector<int> touched;     // component indices hit by the assignment
  int total_dim = 0;
  std::string verify_method;    // "exhaustive" (all assignments evaluated) or "span"
  long centrality_evals = 0;    // assignments evaluated during verification
};

enum class WitnessMode { Full, Template };

struct ExponentReport {
  int exp_g = 0;
  AdmissibilityCertificate admissible;
  int delta_lower_bound = 0;
  std::optional<CentralWitness> delta_witness;
  std::optional<int> delta_exact;
  bool delta_le_exp = true;  // recorded consistency check, not an assumption
  int searched_max_degree = 0;
  std::string mode;
};

// Exhaustive search over ordered sequences of distinct graded-simple
// components; a singleton is admissible when the component is nonzero.
// Requires verified Wedderburn data (throws std::invalid_argument otherwise).
std::pair<int, AdmissibilityCertificate> admissible_max(const GradedAlgebra& b);

// Searches for a proper central polynomial with a nonzero evaluation touching
// every target component. Full mode exhausts the multilinear space per tuple
// (n <= 4); template mode tests products of graded commutators (and the
// single variable at n = 1). Absence of a result means "none found within
// budget", never nonexistence.
std::optional<CentralWitness> central_witness_search(const GradedAlgebra& b,
                                                     const std::vector<int>& targets, int n_max,
                                                     WitnessMode mode,
                                                     const BudgetGuard& guard = {});

// Best certified centrally admissible component set, by total dimension.
std::optional<CentralWitness> central_witness_best(const GradedAlgebra& b, int n_max,
                                                   WitnessMode mode, int stop_at_dim,
                                                   const BudgetGuard& guard = {});

ExponentReport exponent_report(const GradedAlgebra& b, int n_max,
                               WitnessMode mode = WitnessMode::Template,
                               std::optional<int> declared_delta = std::nullopt,
                               const BudgetGuard& guard = {});

}  // namespace gpi
