#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gpi/group.hpp"
#include "gpi/linalg.hpp"

namespace gpi {

// Declared decomposition into graded-simple components plus graded radical.
// Always machine-verified before use (verify_wedderburn).
struct WedderburnData {
  std::vector<RatMat> components;  // each: coordinate vectors spanning the component
  RatMat radical;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
};

// Finite-dimensional associative algebra over Q given by structure constants,
// with a G x Z2 degree on every basis element.
struct GradedAlgebra {
  std::string name;
  GroupSpec group;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<ExtendedDegree> degree;
  // mult[i][j] = sparse expansion of e_i * e_j in the basis.
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> mult;
  std::optional<RatVec> unit;
  std::optional<WedderburnData> wedderburn;

  const std::vector<std::pair<int, Rat>>& mul_basis(int i, int j) const { return mult[i][j]; }
  RatVec mul(const RatVec& x, const RatVec& y) const;
  bool has_odd_part() const;
  // Basis indices of homogeneous G-degree g (both parities), ascending.
  std::vector<int> basis_of_gdegree(const GroupElement& g) const;
  // G-degrees with a nonzero homogeneous component, sorted.
  std::vector<GroupElement> gdegree_support() const;
  void set_entry(int i, int j, int k, Rat c);
  // Detects a two-sided identity element if one exists and stores it.
  void detect_unit();
};

// Associativity + grading compatibility + unit law; reports first violation.
ValidationReport validate_algebra(const GradedAlgebra& a);

// M_n(scalars) with the elementary grading from an n-tuple of degrees
// (first entry must be the identity degree). scalars == nullptr means the
// base field.
GradedAlgebra matrix_elementary(std::string name, const GroupSpec& group, int n,
                                const std::vector<ExtendedDegree>& tuple,
                                const GradedAlgebra* scalars = nullptr);

// A linear-constraint carved subalgebra of upper-triangular matrices:
// identified diagonal groups become single basis elements, zeroed diagonals
// disappear.
struct TriangularConstraints {
  std::vector<std::vector<int>> identify_diagonal;  // 0-based index groups
  std::vector<int> zero_diagonal;                   // 0-based indices
};
GradedAlgebra triangular_subalgebra(std::string name, const GroupSpec& group, int n,
                                    const std::vector<ExtendedDegree>& tuple,
                                    const TriangularConstraints& constraints);

// One basis element per matrix pattern cell; products are computed in M_m and
// re-expanded in the cells (throws if the pattern is not closed).
struct PatternCell {
  std::string label;
  std::vector<std::tuple<int, int, Rat>> entries;  // (row, col, coeff), 0-based
  int parity_override = -1;  // -1: parity comes from the site tuple
};
GradedAlgebra pattern_algebra(std::string name, const GroupSpec& group, int m,
                              const std::vector<ExtendedDegree>& site,
                              const std::vector<PatternCell>& cells);

// Twisted group algebra F^alpha H over a subgroup H of G x Z2; basis b_h,
// b_x b_y = alpha(x,y) b_{xy}, deg b_h = h. The plain group algebra is the
// trivial-cocycle case.
GradedAlgebra twisted_group_algebra(std::string name, const GroupSpec& group, const Cocycle& c);
GradedAlgebra group_algebra(std::string name, const GroupSpec& group,
                            const std::vector<ExtendedDegree>& subgroup);

GradedAlgebra direct_sum(std::string name, const GradedAlgebra& a, const GradedAlgebra& b);

// {z : zx = xz for all x}, exact kernel computation.
Subspace center(const GradedAlgebra& a);

// Exact radical via the regular-representation trace form on the unitization,
// with machine-checked certificates (ideal, nilpotent, semisimple quotient,
// graded). Certificate failure throws std::logic_error.
Subspace jacobson_radical(const GradedAlgebra& a);

ValidationReport verify_wedderburn(const GradedAlgebra& a);
ValidationReport verify_wedderburn(const GradedAlgebra& a, const WedderburnData& w);

// Span of all pairwise products of two subspaces.
Subspace subspace_mul(const GradedAlgebra& a, const Subspace& u, const Subspace& v);

Subspace subalgebra_generated(const GradedAlgebra& a, const RatMat& seeds);
// Two-sided ideal generated inside the (unital or not) subalgebra spanned by
// `within`; `within` must be multiplicatively closed.
Subspace ideal_generated_within(const GradedAlgebra& a, const Subspace& within,
                                const RatMat& seeds);

// Splits a subspace into homogeneous parts; second member reports whether the
// subspace is graded (each part contained in it).
std::pair<std::map<ExtendedDegree, RatMat>, bool> graded_parts(const GradedAlgebra& a,
                                                               const Subspace& s);

bool is_nilpotent_subspace(const GradedAlgebra& a, const Subspace& s);

}  // namespace gpi
