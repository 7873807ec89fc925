#include <doctest.h>

#include "gpi/catalog.hpp"
#include "gpi/codim.hpp"
#include "gpi/verify.hpp"

using namespace gpi;

TEST_CASE("generator sets remain sensitive to deletions") {
  // Over the order-2 group every generator of the column-pattern set is
  // essential: dropping any one breaks bounded-degree equality.
  GroupSpec z2 = parse_group("Z2");
  LabelMap lm{z2, {}};
  CatalogEntry b1 = catalog_build("catalog:B1(1,g)@Z2");
  EnvelopeContext ctx(b1.body);
  std::vector<std::string> gens{"[x1:1, x2:1]", "x1:g x2:g", "x1:1 x2:g"};
  auto equal_up_to = [&](const std::vector<GradedPoly>& gs, int N) {
    for (int n = 1; n <= N; ++n) {
      long total = 1;
      for (int i = 0; i < n; ++i) total *= z2.order();
      for (long t = 0; t < total; ++t) {
        DegreeTuple tuple(n);
        long x = t;
        for (int i = n - 1; i >= 0; --i) {
          tuple[i] = z2.element_at(x % 2);
          x /= 2;
        }
        if (!(t_consequences(z2, gs, tuple) == identity_kernel(ctx, tuple))) return false;
      }
    }
    return true;
  };
  std::vector<GradedPoly> all;
  for (const auto& s : gens) all.push_back(parse_poly(s, lm));
  CHECK(equal_up_to(all, 3));
  for (size_t drop = 0; drop < gens.size(); ++drop) {
    std::vector<GradedPoly> rest;
    for (size_t i = 0; i < gens.size(); ++i)
      if (i != drop) rest.push_back(parse_poly(gens[i], lm));
    CHECK_MESSAGE(!equal_up_to(rest, 3), "dropping " + gens[drop] + " went unnoticed");
  }
}

TEST_CASE("suites pass at their default bounds") {
  for (const auto& name : suite_names()) {
    int bound = 3;
    if (name == "thm5.1") bound = 6;
    SuiteResult r = run_suite(name, bound, 0, 1);
    for (const auto& c : r.checks) {
      CHECK_MESSAGE(c.pass, r.suite + " / " + c.id + ": " + c.detail);
    }
    CHECK(r.pass);
  }
}

TEST_CASE("suite results are reproducible") {
  SuiteResult a = run_suite("prop5.4", 3, 7, 1);
  SuiteResult b = run_suite("prop5.4", 3, 7, 1);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(run_suite("nope", 3, 0, 1), std::invalid_argument);
}
