#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gpi/group.hpp"
#include "gpi/linalg.hpp"

namespace gpi {

// A decorated free variable x_index^deg. Two variables are the same generator
// iff both index and degree agree.
struct Var {
  int index = 0;
  GroupElement deg;

  bool operator==(const Var& o) const = default;
  auto operator<=>(const Var& o) const = default;
};

using Word = std::vector<Var>;

// Rational linear combination of words of decorated variables.
struct GradedPoly {
  GroupSpec group;
  std::vector<std::pair<Word, Rat>> terms;  // canonical: sorted words, merged, no zeros

  void canonicalize();
  bool is_zero() const { return terms.empty(); }
};

GradedPoly poly_zero(const GroupSpec& g);
GradedPoly poly_var(const GroupSpec& g, int index, const GroupElement& deg);
GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_sub(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_scale(const GradedPoly& a, const Rat& c);
GradedPoly poly_commutator(const GradedPoly& a, const GradedPoly& b);      // ab - ba
GradedPoly poly_anticommutator(const GradedPoly& a, const GradedPoly& b);  // ab + ba

using DegreeTuple = std::vector<GroupElement>;

std::string tuple_str(const GroupSpec& g, const DegreeTuple& t);

// Multilinear polynomial on positions 0..n-1 with a fixed degree tuple; every
// term is a permutation word.
struct MultilinearPoly {
  DegreeTuple tuple;
  std::vector<std::pair<std::vector<int>, Rat>> terms;

  int n() const { return static_cast<int>(tuple.size()); }
  void canonicalize();
};

// Degree-label resolution for the text grammar. Explicit labels win; "1"/"e",
// generator powers ("g", "g2h") and residue tuples ("(1,0)") always resolve.
struct LabelMap {
  GroupSpec group;
  std::map<std::string, GroupElement> labels;

  GroupElement resolve(const std::string& s) const;
  std::string label_of(const GroupElement& e) const;
};

// Grammar:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := [rational] factor+
//   factor := var | '[' poly (',' poly)+ ']' | 'ac(' poly ',' poly ')' | '(' poly ')'
//   var    := 'x' index ':' degree-label
// Brackets are left-normed commutators. Throws std::invalid_argument with a
// position on syntax errors.
GradedPoly parse_poly(const std::string& text, const LabelMap& labels);
std::string emit_poly(const GradedPoly& p, const LabelMap& labels);

// Full polarization restricted to the multilinear component, one output per
// multihomogeneous component of the input. No fractional normalization.
std::vector<MultilinearPoly> multilinearize(const GradedPoly& f);

long factorial(int n);
long perm_rank(const std::vector<int>& word);           // lex rank among permutations
std::vector<int> perm_unrank(int n, long rank);

// Row-reduced subspace of the n!-dimensional multilinear monomial space of a
// fixed degree tuple (monomials in lex word order).
struct PolySubspace {
  DegreeTuple tuple;
  RatMat basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const PolySubspace& o) const = default;
};

PolySubspace poly_subspace_zero(const DegreeTuple& t);
PolySubspace poly_subspace_full(const DegreeTuple& t);
RatVec mpoly_to_vec(const MultilinearPoly& p);
MultilinearPoly vec_to_mpoly(const DegreeTuple& t, const RatVec& v);

PolySubspace poly_subspace_sum(const PolySubspace& a, const PolySubspace& b);
PolySubspace poly_subspace_intersection(const PolySubspace& a, const PolySubspace& b);
bool poly_subspace_contains(const PolySubspace& s, const MultilinearPoly& p);

// Applies a position relabeling: position i becomes perm[i].
PolySubspace permute_positions(const PolySubspace& s, const std::vector<int>& perm);

// Multilinear component, in the given degree tuple, of the T_G-ideal
// generated by the polynomials: the span of u f(w_1,...,w_k) v over all
// multilinearized generators f, disjoint monomial substitutions w_i matching
// the generator degrees, and flanking monomials u, v in the leftover
// variables.
PolySubspace t_consequences(const GroupSpec& group, const std::vector<GradedPoly>& gens,
                            const DegreeTuple& tuple);

// Multilinear component of a product of two T-ideals: the span, over ordered
// splittings of the variable set, of products of the factors' multilinear
// components on the two blocks.
using SubspaceProvider = std::function<PolySubspace(const DegreeTuple&)>;
PolySubspace product_span(const SubspaceProvider& left, const SubspaceProvider& right,
                          const DegreeTuple& tuple);

}  // namespace gpi
