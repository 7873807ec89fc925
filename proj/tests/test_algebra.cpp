#include <doctest.h>

#include "gpi/algebra.hpp"

using namespace gpi;

namespace {

GradedAlgebra ut2(const GroupSpec& g, const ExtendedDegree& d2) {
  return triangular_subalgebra("UT2", g, 2, {ext_identity(g), d2}, {});
}

RatVec unit_at(int dim, int i) {
  RatVec v = zero_vec(dim);
  v[i] = 1;
  return v;
}

int label_index(const GradedAlgebra& a, const std::string& l) {
  for (int i = 0; i < a.dim; ++i)
    if (a.basis[i] == l) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("elementary matrix grading") {
  GroupSpec z2 = parse_group("Z2");
  GroupElement g = z2.parse_label("g");
  GradedAlgebra m2 = matrix_elementary("M2", z2, 2, {ext_identity(z2), ExtendedDegree{g, 0}});
  CHECK(m2.dim == 4);
  CHECK(validate_algebra(m2).ok);
  CHECK(m2.degree[label_index(m2, "e12")] == ExtendedDegree{g, 0});
  CHECK(m2.degree[label_index(m2, "e21")] == ExtendedDegree{g, 0});
  CHECK(m2.degree[label_index(m2, "e11")] == ext_identity(z2));
  REQUIRE(m2.unit.has_value());

  // odd variant: e12 carries parity 1, diagonal stays even
  GradedAlgebra m2o = matrix_elementary("M2o", z2, 2, {ext_identity(z2), ExtendedDegree{g, 1}});
  CHECK(m2o.degree[label_index(m2o, "e12")] == ExtendedDegree{g, 1});
  CHECK(m2o.degree[label_index(m2o, "e11")] == ext_identity(z2));

  // trivial tuple: everything of identity degree
  GradedAlgebra m2t = matrix_elementary("M2t", z2, 2, {ext_identity(z2), ext_identity(z2)});
  for (const auto& d : m2t.degree) CHECK(d == ext_identity(z2));

  CHECK_THROWS_AS(matrix_elementary("bad", z2, 2, {ExtendedDegree{g, 0}, ext_identity(z2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_elementary("bad", z2, 3, {ext_identity(z2), ExtendedDegree{g, 0}}),
                  std::invalid_argument);
}

TEST_CASE("grading violations are reported") {
  GroupSpec z2 = parse_group("Z2");
  GradedAlgebra a = ut2(z2, ExtendedDegree{z2.parse_label("g"), 0});
  CHECK(validate_algebra(a).ok);
  // force e12*e22 onto a wrong-degree target
  GradedAlgebra bad = a;
  int e12 = label_index(bad, "e12"), e22 = label_index(bad, "e22"), e11 = label_index(bad, "e11");
  bad.mult[e12][e22] = {{e11, Rat(1)}};
  ValidationReport rep = validate_algebra(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.message.find("grading") != std::string::npos);
}

TEST_CASE("triangular identifications") {
  GroupSpec z2 = parse_group("Z2");
  GroupElement g = z2.parse_label("g");
  // corner-identified 4x4 triangular pattern: 9 basis elements
  std::vector<ExtendedDegree> t{ext_identity(z2), ExtendedDegree{g, 0}, ExtendedDegree{g, 0},
                                ext_identity(z2)};
  GradedAlgebra a = triangular_subalgebra("A", z2, 4, t, {{{0, 3}}, {}});
  CHECK(a.dim == 9);
  CHECK(validate_algebra(a).ok);
  REQUIRE(a.unit.has_value());
  // zeroed corners: 13 basis elements
  std::vector<ExtendedDegree> t5{ext_identity(z2), ExtendedDegree{g, 0}, ext_identity(z2),
                                 ExtendedDegree{g, 0}, ext_identity(z2)};
  GradedAlgebra b = triangular_subalgebra("B", z2, 5, t5, {{}, {0, 4}});
  CHECK(b.dim == 13);
  CHECK_FALSE(b.unit.has_value());
  // plain UT2
  CHECK(ut2(z2, ExtendedDegree{g, 0}).dim == 3);
}

TEST_CASE("group algebras") {
  GroupSpec z3 = parse_group("Z3");
  std::vector<ExtendedDegree> sub;
  for (const auto& e : z3.elements()) sub.push_back(ExtendedDegree{e, 0});
  GradedAlgebra fc3 = group_algebra("FC3", z3, sub);
  CHECK(fc3.dim == 3);
  CHECK(validate_algebra(fc3).ok);
  REQUIRE(fc3.unit.has_value());
  // commutative
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(fc3.mul(unit_at(3, i), unit_at(3, j)) == fc3.mul(unit_at(3, j), unit_at(3, i)));

  GroupSpec k4 = parse_group("Z2xZ2");
  Cocycle c = sign_cocycle(k4, ExtendedDegree{k4.parse_label("g"), 0},
                           ExtendedDegree{k4.parse_label("h"), 0});
  GradedAlgebra tw = twisted_group_algebra("FaK4", k4, c);
  CHECK(validate_algebra(tw).ok);
  int bg = -1, bh = -1;
  for (int i = 0; i < 4; ++i) {
    if (tw.degree[i].g == k4.parse_label("g")) bg = i;
    if (tw.degree[i].g == k4.parse_label("h")) bh = i;
  }
  // generators anticommute
  {
    RatVec gh = tw.mul(unit_at(4, bg), unit_at(4, bh));
    RatVec hg = tw.mul(unit_at(4, bh), unit_at(4, bg));
    for (int i = 0; i < 4; ++i) CHECK(gh[i] == -hg[i]);
    CHECK_FALSE(is_zero_vec(gh));
  }
  // trivial cocycle reproduces the plain group algebra
  auto sub4 = subgroup_generated_ext(k4, {ExtendedDegree{k4.parse_label("g"), 0},
                                          ExtendedDegree{k4.parse_label("h"), 0}});
  GradedAlgebra plain = twisted_group_algebra("FK4", k4, trivial_cocycle(k4, sub4));
  GradedAlgebra plain2 = group_algebra("FK4", k4, sub4);
  CHECK(plain.mult == plain2.mult);

  Cocycle badc = trivial_cocycle(k4, sub4);
  badc.table[0][1] = 0;
  CHECK_THROWS_AS(twisted_group_algebra("bad", k4, badc), std::invalid_argument);
}

TEST_CASE("center computations") {
  GroupSpec z2 = parse_group("Z2");
  GroupElement g = z2.parse_label("g");
  SUBCASE("corner-identified body has a two-dimensional center") {
    GroupSpec z1 = parse_group("Z1");
    std::vector<ExtendedDegree> t(4, ext_identity(z1));
    GradedAlgebra a = triangular_subalgebra("A", z1, 4, t, {{{0, 3}}, {}});
    Subspace z = center(a);
    CHECK(z.dim() == 2);
    CHECK(subspace_contains(z, *a.unit));
    CHECK(subspace_contains(z, unit_at(a.dim, label_index(a, "e14"))));
  }
  SUBCASE("full matrix algebra has scalar center") {
    GradedAlgebra m2 = matrix_elementary("M2", z2, 2, {ext_identity(z2), ExtendedDegree{g, 0}});
    Subspace z = center(m2);
    CHECK(z.dim() == 1);
    CHECK(subspace_contains(z, *m2.unit));
  }
  SUBCASE("column pattern has zero center") {
    std::vector<PatternCell> cells{{"e12", {{0, 1, Rat(1)}}, 0}, {"e22", {{1, 1, Rat(1)}}, 0}};
    GradedAlgebra b1 = pattern_algebra("B1", z2, 2,
                                       {ext_identity(z2), ExtendedDegree{g, 0}}, cells);
    CHECK(center(b1).dim() == 0);
  }
}

TEST_CASE("jacobson radical with certificates") {
  GroupSpec z1 = parse_group("Z1");
  SUBCASE("strictly upper part of UT2") {
    GradedAlgebra a = ut2(z1, ext_identity(z1));
    Subspace j = jacobson_radical(a);
    CHECK(j.dim() == 1);
    CHECK(subspace_contains(j, unit_at(3, label_index(a, "e12"))));
  }
  SUBCASE("semisimple group algebra") {
    GroupSpec z3 = parse_group("Z3");
    std::vector<ExtendedDegree> sub;
    for (const auto& e : z3.elements()) sub.push_back(ExtendedDegree{e, 0});
    CHECK(jacobson_radical(group_algebra("FC3", z3, sub)).dim() == 0);
  }
  SUBCASE("corner-identified body: radical is the strict upper part") {
    std::vector<ExtendedDegree> t(4, ext_identity(z1));
    GradedAlgebra a = triangular_subalgebra("A", z1, 4, t, {{{0, 3}}, {}});
    Subspace j = jacobson_radical(a);
    CHECK(j.dim() == 6);
    CHECK(is_nilpotent_subspace(a, j));
    CHECK(graded_parts(a, j).second);
  }
  SUBCASE("non-unital pattern") {
    GroupSpec z2 = parse_group("Z2");
    std::vector<PatternCell> cells{{"e11", {{0, 0, Rat(1)}}, 0}, {"e12", {{0, 1, Rat(1)}}, 0}};
    GradedAlgebra c2 = pattern_algebra("C2", z2, 2,
                                       {ext_identity(z2), ExtendedDegree{z2.parse_label("g"), 0}},
                                       cells);
    Subspace j = jacobson_radical(c2);
    CHECK(j.dim() == 1);
    CHECK(subspace_contains(j, unit_at(2, label_index(c2, "e12"))));
  }
}

TEST_CASE("wedderburn verification") {
  GroupSpec z1 = parse_group("Z1");
  std::vector<ExtendedDegree> t(4, ext_identity(z1));
  GradedAlgebra a = triangular_subalgebra("A", z1, 4, t, {{{0, 3}}, {}});
  const int u1 = label_index(a, "u1"), e22 = label_index(a, "e22"), e33 = label_index(a, "e33");
  WedderburnData good;
  good.components = {{unit_at(9, u1)}, {unit_at(9, e22)}, {unit_at(9, e33)}};
  for (int i = 0; i < 9; ++i)
    if (i != u1 && i != e22 && i != e33) good.radical.push_back(unit_at(9, i));
  CHECK(verify_wedderburn(a, good).ok);

  SUBCASE("splitting an identified idempotent is rejected") {
    // declaring the two corner slots separately: those vectors are not even
    // idempotents of the algebra, and the direct sum fails
    WedderburnData bad = good;
    bad.components.push_back({unit_at(9, label_index(a, "e12"))});
    CHECK_FALSE(verify_wedderburn(a, bad).ok);
  }
  SUBCASE("radical must match") {
    WedderburnData bad = good;
    bad.radical.pop_back();
    CHECK_FALSE(verify_wedderburn(a, bad).ok);
  }
  SUBCASE("graded-simplicity of a group algebra via ideal closure") {
    GroupSpec z3 = parse_group("Z3");
    std::vector<ExtendedDegree> sub;
    for (const auto& e : z3.elements()) sub.push_back(ExtendedDegree{e, 0});
    GradedAlgebra fc3 = group_algebra("FC3", z3, sub);
    CHECK(verify_wedderburn(fc3).ok);  // constructor supplies the data
  }
}

TEST_CASE("subspace products and direct sums") {
  GroupSpec z1 = parse_group("Z1");
  std::vector<ExtendedDegree> t(4, ext_identity(z1));
  GradedAlgebra a = triangular_subalgebra("A", z1, 4, t, {{{0, 3}}, {}});
  Subspace j = jacobson_radical(a);
  Subspace u1 = span_of(9, {unit_at(9, label_index(a, "u1"))});
  Subspace e22 = span_of(9, {unit_at(9, label_index(a, "e22"))});
  Subspace chain = subspace_mul(a, subspace_mul(a, u1, j), e22);
  CHECK(chain.dim() == 1);
  CHECK(subspace_contains(chain, unit_at(9, label_index(a, "e12"))));
  // J^3 is the corner slot
  Subspace j3 = subspace_mul(a, subspace_mul(a, j, j), j);
  CHECK(j3.dim() == 1);
  CHECK(subspace_contains(j3, unit_at(9, label_index(a, "e14"))));
  CHECK(subspace_mul(a, u1, zero_subspace(9)).dim() == 0);

  GroupSpec z2 = parse_group("Z2");
  GradedAlgebra x = ut2(z2, ExtendedDegree{z2.parse_label("g"), 0});
  GradedAlgebra y = ut2(z2, ext_identity(z2));
  GradedAlgebra s = direct_sum("S", x, y);
  CHECK(s.dim == 6);
  CHECK(validate_algebra(s).ok);
  REQUIRE(s.unit.has_value());
}
