#pragma once

#include <map>

#include "gpi/algebra.hpp"
#include "gpi/poly.hpp"

namespace gpi {

// A value of the Grassmann envelope E(B): a body vector tagged by the ordered
// set of Grassmann generators attached to the odd positions, with the sign
// folded into the body coordinates.
struct TaggedValue {
  std::vector<int> tag;  // odd positions, strictly increasing
  RatVec element;
};

// Evaluation semantics of E(body) with one Grassmann generator per position.
// A body with no odd part degenerates to plain algebra evaluation.
class EnvelopeContext {
 public:
  explicit EnvelopeContext(GradedAlgebra body);

  const GradedAlgebra& body() const { return body_; }
  bool trivial_odd() const { return trivial_odd_; }

  // Body basis indices of G-degree g (both parities), ascending.
  std::vector<int> candidates(const GroupElement& g) const;

  // Rows spanning the constraints whose kernel is the sign-twisted
  // centralizer Z_t: v is central as a value of tag parity t iff
  // v b = (-1)^(t * parity(b)) b v for every homogeneous b.
  const RatMat& central_constraints(int tag_parity) const { return constraints_[tag_parity & 1]; }
  bool value_is_central(int tag_parity, const RatVec& v) const;

 private:
  GradedAlgebra body_;
  bool trivial_odd_ = false;
  RatMat constraints_[2];
};

// value = sgn(word restricted to the odd positions) * product of the assigned
// basis elements in word order; tag = the odd positions ascending.
TaggedValue envelope_eval_monomial(const EnvelopeContext& ctx, const std::vector<int>& word,
                                   const std::vector<int>& assignment);

// Linear extension over the monomials; all monomials share the same tag.
// Throws on a degree mismatch between the assignment and the tuple.
TaggedValue envelope_eval_poly(const EnvelopeContext& ctx, const MultilinearPoly& f,
                               const std::vector<int>& assignment);

// ---------------------------------------------------------------------------
// Brute-force oracle over the truncated free supercommutative algebra: one
// commutative variable per (position, even basis element), one Grassmann
// variable per (position, odd basis element). Used only as an independent
// cross-check of the sign rule.

struct SuperKey {
  std::vector<std::pair<int, int>> u;  // commutative part, sorted
  std::vector<std::pair<int, int>> v;  // Grassmann part, sorted after sign normalization
  int body = 0;

  auto operator<=>(const SuperKey& o) const = default;
};

using SuperElem = std::map<SuperKey, Rat>;

// The generic element of degree g at a position: sum of u (x) a over even
// basis elements a of degree g plus v (x) b over odd ones.
SuperElem oracle_generic_element(const EnvelopeContext& ctx, int position, const GroupElement& g);

SuperElem oracle_mul(const EnvelopeContext& ctx, const SuperElem& x, const SuperElem& y);
SuperElem oracle_add(SuperElem x, const SuperElem& y, const Rat& scale);

// Full expansion of f at the generic elements of its tuple. Throws when n
// exceeds the budget.
SuperElem oracle_eval(const EnvelopeContext& ctx, const MultilinearPoly& f, int budget = 6);

// Body-coordinate vector multiplying the squarefree word in which position k
// contributed its variable for basis element assignment[k].
RatVec oracle_coefficient(const EnvelopeContext& ctx, const SuperElem& e,
                          const std::vector<int>& assignment);

}  // namespace gpi
