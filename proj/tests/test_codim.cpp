#include <doctest.h>

#include "gpi/catalog.hpp"
#include "gpi/codim.hpp"

using namespace gpi;

namespace {

LabelMap labels_of(const CatalogEntry& e) { return LabelMap{e.group, {}}; }

}  // namespace

TEST_CASE("identity kernels of small patterns") {
  SUBCASE("column pattern at tuple (1,g)") {
    CatalogEntry b1 = catalog_build("catalog:B1(1,g)@Z2");
    EnvelopeContext ctx(b1.body);
    DegreeTuple t{b1.group.identity(), b1.group.parse_label("g")};
    PolySubspace k = identity_kernel(ctx, t);
    REQUIRE(k.dim() == 1);
    // the kernel is spanned by x1^1 x2^g (e22 e12 = 0 while e12 e22 = e12)
    MultilinearPoly m;
    m.tuple = t;
    m.terms = {{{0, 1}, Rat(1)}};
    CHECK(poly_subspace_contains(k, m));
  }
  SUBCASE("empty homogeneous component gives the full kernel") {
    CatalogEntry b1 = catalog_build("catalog:B1(1,g)@Z4");
    EnvelopeContext ctx(b1.body);
    DegreeTuple t{b1.group.parse_label("g2"), b1.group.identity()};
    CHECK(identity_kernel(ctx, t).dim() == 2);
  }
  SUBCASE("full matrix algebra has no bilinear identities") {
    CatalogEntry a1 = catalog_build("catalog:A1(g,0)@Z2");
    EnvelopeContext ctx(a1.body);
    DegreeTuple t(2, a1.group.identity());
    CHECK(identity_kernel(ctx, t).dim() == 0);
  }
}

TEST_CASE("central kernels") {
  SUBCASE("Grassmann algebra at n = 2") {
    CatalogEntry e = catalog_build("catalog:E@Z1");
    EnvelopeContext ctx(e.body);
    DegreeTuple t(2, e.group.identity());
    PolySubspace zk = central_kernel(ctx, t);
    PolySubspace ik = identity_kernel(ctx, t);
    CHECK(ik.dim() == 0);
    REQUIRE(zk.dim() == 1);
    MultilinearPoly comm;
    comm.tuple = t;
    comm.terms = {{{0, 1}, Rat(1)}, {{1, 0}, Rat(-1)}};
    CHECK(poly_subspace_contains(zk, comm));
  }
  SUBCASE("commutative algebra: everything is central") {
    CatalogEntry fc = catalog_build("catalog:A2(3)@Z3");
    EnvelopeContext ctx(fc.body);
    DegreeTuple t{fc.group.parse_label("g"), fc.group.parse_label("g2")};
    CHECK(central_kernel(ctx, t).dim() == 2);
    CHECK(identity_kernel(ctx, t).dim() == 0);
  }
  SUBCASE("zero center forces the kernels to coincide") {
    CatalogEntry b1 = catalog_build("catalog:B1(1,g)@Z2");
    EnvelopeContext ctx(b1.body);
    for (int mask = 0; mask < 4; ++mask) {
      DegreeTuple t{mask & 1 ? b1.group.parse_label("g") : b1.group.identity(),
                    mask & 2 ? b1.group.parse_label("g") : b1.group.identity()};
      CHECK(identity_kernel(ctx, t) == central_kernel(ctx, t));
    }
  }
}

TEST_CASE("codimension sequences") {
  SUBCASE("group algebra of order two") {
    CatalogEntry fc2 = catalog_build("catalog:A2(2)@Z2");
    EnvelopeContext ctx(fc2.body);
    auto reports = codim_sequence(ctx, 5);
    REQUIRE(reports.size() == 5);
    long expect = 2;
    for (const auto& rep : reports) {
      CHECK(rep.c == expect);
      CHECK(rep.cz == 0);
      CHECK(rep.cdelta == expect);
      expect *= 2;
    }
  }
  SUBCASE("Grassmann algebra halves the monomial space") {
    CatalogEntry e = catalog_build("catalog:E@Z1");
    EnvelopeContext ctx(e.body);
    auto reports = codim_sequence(ctx, 6);
    long expect = 1;
    for (const auto& rep : reports) {
      CHECK(rep.c == expect);
      expect *= 2;
    }
  }
  SUBCASE("zero algebra") {
    GradedAlgebra z;
    z.name = "zero";
    z.group = parse_group("Z1");
    EnvelopeContext ctx(z);
    for (const auto& rep : codim_sequence(ctx, 3)) {
      CHECK(rep.c == 0);
      CHECK(rep.cz == 0);
      CHECK(rep.cdelta == 0);
    }
  }
  SUBCASE("one-dimensional nilpotent algebra") {
    GradedAlgebra z;
    z.name = "nil1";
    z.group = parse_group("Z1");
    z.dim = 1;
    z.basis = {"x"};
    z.degree = {ext_identity(z.group)};
    z.mult.assign(1, std::vector<std::vector<std::pair<int, Rat>>>(1));  // x * x = 0
    EnvelopeContext ctx(z);
    auto reports = codim_sequence(ctx, 3);
    CHECK(reports[0].c == 1);
    CHECK(reports[1].c == 0);
    CHECK(reports[2].c == 0);
  }
  SUBCASE("budget refusal, nothing partial") {
    CatalogEntry e = catalog_build("catalog:E@Z1");
    EnvelopeContext ctx(e.body);
    CHECK_THROWS_AS(codim_sequence(ctx, 9), BudgetError);
  }
  SUBCASE("tuple parallelism is deterministic") {
    CatalogEntry fc2 = catalog_build("catalog:A2(2)@Z2");
    EnvelopeContext ctx(fc2.body);
    auto seq1 = codim_sequence(ctx, 4, 1);
    auto seq4 = codim_sequence(ctx, 4, 4);
    REQUIRE(seq1.size() == seq4.size());
    for (size_t i = 0; i < seq1.size(); ++i) {
      CHECK(seq1[i].c == seq4[i].c);
      CHECK(seq1[i].cz == seq4[i].cz);
      CHECK(seq1[i].tuples.size() == seq4[i].tuples.size());
    }
  }
}

TEST_CASE("kernel invariants") {
  for (const char* spec : {"catalog:B1(1,g)@Z2", "catalog:A6(g,1,g)@Z2", "catalog:E@Z1",
                           "catalog:A4@Z4"}) {
    CatalogEntry entry = catalog_build(spec);
    EnvelopeContext ctx(entry.body);
    auto support = entry.body.gdegree_support();
    for (int n = 1; n <= 2; ++n) {
      std::vector<DegreeTuple> tuples;
      if (n == 1) {
        for (const auto& d : support) tuples.push_back({d});
      } else {
        for (const auto& d1 : support)
          for (const auto& d2 : support) tuples.push_back({d1, d2});
      }
      for (const auto& t : tuples) {
        PolySubspace ik = identity_kernel(ctx, t);
        PolySubspace zk = central_kernel(ctx, t);
        const int amb = static_cast<int>(factorial(n));
        // identity kernel inside central kernel
        CHECK(subspace_leq(Subspace{amb, ik.basis}, Subspace{amb, zk.basis}));
        // relabeling positions maps kernels onto the permuted tuple's kernels
        if (n == 2) {
          PolySubspace moved = permute_positions(ik, {1, 0});
          DegreeTuple rt{t[1], t[0]};
          CHECK(moved == identity_kernel(ctx, rt));
        }
      }
    }
  }
}

TEST_CASE("unit substitutions never change kernels") {
  for (const char* spec : {"catalog:A6(g,1,g)@Z2", "catalog:A3@Z4"}) {
    CatalogEntry entry = catalog_build(spec);
    REQUIRE(entry.body.unit.has_value());
    EnvelopeContext ctx(entry.body);
    std::vector<ExtraSubstitution> extra{
        ExtraSubstitution{entry.group.identity(), 0, *entry.body.unit}};
    auto support = entry.body.gdegree_support();
    for (const auto& d1 : support)
      for (const auto& d2 : support) {
        DegreeTuple t{d1, d2};
        CHECK(identity_kernel(ctx, t) == identity_kernel(ctx, t, extra));
        CHECK(central_kernel(ctx, t) == central_kernel(ctx, t, extra));
      }
  }
}

TEST_CASE("envelope evaluation degenerates on trivially odd bodies") {
  // the A6 body has a trivial odd part: forcing all parities even changes
  // nothing
  CatalogEntry a6 = catalog_build("catalog:A6(g,1,g)@Z2");
  GradedAlgebra direct = a6.body;
  for (auto& d : direct.degree) d.parity = 0;
  EnvelopeContext env(a6.body), flat(direct);
  auto support = a6.body.gdegree_support();
  for (const auto& d1 : support)
    for (const auto& d2 : support) {
      DegreeTuple t{d1, d2};
      CHECK(identity_kernel(env, t).basis == identity_kernel(flat, t).basis);
      CHECK(central_kernel(env, t).basis == central_kernel(flat, t).basis);
    }
}

TEST_CASE("polynomial classification") {
  LabelMap lmz2{parse_group("Z2"), {}};
  SUBCASE("column pattern satisfies the diagonal commutator") {
    CatalogEntry b1 = catalog_build("catalog:B1(1,g)@Z2");
    EnvelopeContext ctx(b1.body);
    CHECK(classify_poly(ctx, parse_poly("[x1:1, x2:1]", lmz2)) == CentralClass::Identity);
    CHECK(classify_poly(ctx, parse_poly("x1:g x2:g", lmz2)) == CentralClass::Identity);
    CHECK(classify_poly(ctx, parse_poly("x1:1 x2:g", lmz2)) == CentralClass::Identity);
    CHECK(classify_poly(ctx, parse_poly("x1:g x2:1", lmz2)) == CentralClass::NotCentral);
  }
  SUBCASE("Grassmann commutator is proper central") {
    CatalogEntry e = catalog_build("catalog:E@Z1");
    EnvelopeContext ctx(e.body);
    LabelMap lm{e.group, {}};
    CHECK(classify_poly(ctx, parse_poly("[x1:1, x2:1]", lm)) == CentralClass::ProperCentral);
  }
  SUBCASE("matrix commutator is not central") {
    CatalogEntry a1 = catalog_build("catalog:A1(g,0)@Z2");
    EnvelopeContext ctx(a1.body);
    CHECK(classify_poly(ctx, parse_poly("[x1:1, x2:1]", lmz2)) == CentralClass::NotCentral);
  }
}
