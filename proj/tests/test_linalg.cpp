#include <doctest.h>

#include "gpi/linalg.hpp"

using namespace gpi;

namespace {
RatVec v(std::initializer_list<long> xs) {
  RatVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("rref canonical form") {
  RatMat m{v({2, 4, 6}), v({1, 2, 3}), v({0, 1, 1})};
  CHECK(rref(m) == 2);
  CHECK(m[0] == v({1, 0, 1}));
  CHECK(m[1] == v({0, 1, 1}));
  // same span, different presentation -> identical rref
  RatMat m2{v({1, 3, 4}), v({3, 5, 8})};
  rref(m2);
  CHECK(m == m2);
}

TEST_CASE("nullspace") {
  RatMat m{v({1, 1, 0}), v({0, 0, 1})};
  RatMat k = nullspace(m, 3);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == v({1, -1, 0}));
  CHECK(nullspace({}, 2).size() == 2);
}

TEST_CASE("subspace operations") {
  Subspace a = span_of(3, {v({1, 0, 0}), v({0, 1, 0})});
  Subspace b = span_of(3, {v({0, 1, 0}), v({0, 0, 1})});
  CHECK(subspace_sum(a, b) == full_subspace(3));
  Subspace cap = subspace_intersection(a, b);
  CHECK(cap.dim() == 1);
  CHECK(subspace_contains(cap, v({0, 5, 0})));
  CHECK(subspace_leq(cap, a));
  CHECK(subspace_leq(cap, b));
  CHECK_FALSE(subspace_contains(a, v({0, 0, 1})));
}

TEST_CASE("span builder matches batch rref") {
  SpanBuilder sb(4);
  RatMat rows{v({1, 2, 0, 0}), v({2, 4, 0, 0}), v({0, 0, 1, 1}), v({1, 2, 1, 1}), v({0, 1, 0, 0})};
  int grew = 0;
  for (const auto& r : rows) grew += sb.add(r) ? 1 : 0;
  CHECK(grew == 3);
  Subspace s = sb.take();
  CHECK(s == span_of(4, rows));
}
