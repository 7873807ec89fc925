#pragma once

#include <string>
#include <vector>

#include "gpi/rational.hpp"

namespace gpi {

struct GroupElement {
  std::vector<int> r;  // residues, componentwise reduced

  bool operator==(const GroupElement& o) const = default;
  auto operator<=>(const GroupElement& o) const = default;
};

// A finite abelian group presented as Z_{n1} x ... x Z_{nk}.
struct GroupSpec {
  std::vector<int> orders;

  bool operator==(const GroupSpec& o) const = default;

  int rank() const { return static_cast<int>(orders.size()); }
  long order() const;

  GroupElement identity() const;
  GroupElement reduce(std::vector<int> residues) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, long e) const;
  int order_of(const GroupElement& a) const;

  std::vector<GroupElement> elements() const;  // mixed-radix order
  long index_of(const GroupElement& a) const;
  GroupElement element_at(long idx) const;

  void check_element(const GroupElement& a) const;  // throws on mismatch

  // Structural labels: "1" for the identity, then powers of the per-factor
  // generators g, h, k, l, e.g. "g", "g2h", "(3,1)" fallback for rank > 4.
  std::string label(const GroupElement& a) const;
  GroupElement parse_label(const std::string& s) const;
};

// Element of G x Z2 (the extra parity bit drives the Grassmann calculus).
struct ExtendedDegree {
  GroupElement g;
  int parity = 0;

  bool operator==(const ExtendedDegree& o) const = default;
  auto operator<=>(const ExtendedDegree& o) const = default;
};

ExtendedDegree ext_mul(const GroupSpec& spec, const ExtendedDegree& a, const ExtendedDegree& b);
ExtendedDegree ext_inv(const GroupSpec& spec, const ExtendedDegree& a);
ExtendedDegree ext_identity(const GroupSpec& spec);

std::vector<GroupElement> subgroup_generated(const GroupSpec& spec,
                                             const std::vector<GroupElement>& gens);
std::vector<ExtendedDegree> subgroup_generated_ext(const GroupSpec& spec,
                                                   const std::vector<ExtendedDegree>& gens);

// A normalized 2-cocycle with nonzero rational values on a subgroup of G x Z2.
struct Cocycle {
  std::vector<ExtendedDegree> subgroup;  // closed under product, sorted
  RatMat table;                          // table[i][j] = alpha(subgroup[i], subgroup[j])

  int find(const ExtendedDegree& x) const;  // -1 if absent
  const Rat& value(const ExtendedDegree& a, const ExtendedDegree& b) const;
};

struct CocycleReport {
  bool ok = true;
  std::string message;  // first violated triple / pair when not ok
};

CocycleReport validate_cocycle(const GroupSpec& spec, const Cocycle& c);

Cocycle trivial_cocycle(const GroupSpec& spec, std::vector<ExtendedDegree> subgroup);

// The bilinear sign cocycle on the subgroup generated by two commuting
// order-2 elements a, b: alpha(a^s b^t, a^u b^v) = (-1)^(t*u). The two
// generators anticommute in the twisted group algebra and square to +1.
Cocycle sign_cocycle(const GroupSpec& spec, const ExtendedDegree& a, const ExtendedDegree& b);

// Parses group names of the form "Z4", "Z2xZ2", "Z1".
GroupSpec parse_group(const std::string& name);
std::string group_name(const GroupSpec& spec);

}  // namespace gpi
