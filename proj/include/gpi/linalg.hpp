#pragma once

#include <optional>
#include <string>

#include "gpi/rational.hpp"

namespace gpi {

// Reduced row echelon form in place, zero rows dropped. Returns the rank.
// The result is the canonical basis of the row space: two row sets span the
// same subspace iff their rref matrices are identical.
int rref(RatMat& m);

int rank_of(RatMat m);

// Canonical basis of {x : m x = 0} with ncols unknowns (rows of the result
// are the kernel vectors, in rref form).
RatMat nullspace(const RatMat& m, int ncols);

// A linear subspace of Q^ambient in canonical (rref) form.
struct Subspace {
  int ambient = 0;
  RatMat basis;  // rref rows

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const Subspace& o) const = default;
};

Subspace span_of(int ambient, RatMat vectors);
Subspace zero_subspace(int ambient);
Subspace full_subspace(int ambient);

bool subspace_contains(const Subspace& s, const RatVec& v);
bool subspace_leq(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

// Incremental row-reduction sink; used where spans are accumulated from many
// generated vectors and most insertions are dependent.
class SpanBuilder {
 public:
  explicit SpanBuilder(int ambient) : ambient_(ambient) {}

  // Returns true if the vector enlarged the span.
  bool add(RatVec v);
  bool full() const { return static_cast<int>(rows_.size()) == ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  Subspace take();

 private:
  int ambient_;
  RatMat rows_;               // echelon rows, pivot columns strictly increasing
  std::vector<int> pivots_;   // pivot column per row
};

}  // namespace gpi
