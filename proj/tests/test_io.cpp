#include <doctest.h>

#include "gpi/algebra_io.hpp"
#include "gpi/catalog.hpp"
#include "gpi/report.hpp"

using namespace gpi;

TEST_CASE("algebra documents round-trip") {
  for (const char* spec : {"catalog:A6(g,1,g)@Z2", "catalog:A9(g,g,g)@Z2", "catalog:A4@Z4",
                           "catalog:A5(1,0)@Z2xZ2", "catalog:E@Z1"}) {
    CatalogEntry entry = catalog_build(spec);
    std::string text = algebra_to_json(entry.body);
    GradedAlgebra parsed = algebra_from_json(text);
    CHECK(parsed.name == entry.body.name);
    CHECK(parsed.group == entry.body.group);
    CHECK(parsed.basis == entry.body.basis);
    CHECK(parsed.degree == entry.body.degree);
    CHECK(parsed.mult == entry.body.mult);
    CHECK(parsed.unit == entry.body.unit);
    REQUIRE(parsed.wedderburn.has_value() == entry.body.wedderburn.has_value());
    if (parsed.wedderburn) {
      CHECK(parsed.wedderburn->components == entry.body.wedderburn->components);
      CHECK(parsed.wedderburn->radical == entry.body.wedderburn->radical);
    }
    // emitted form is canonical: emit(parse(emit)) == emit
    CHECK(algebra_to_json(parsed) == text);
  }
}

TEST_CASE("malformed documents are rejected with messages") {
  CHECK_THROWS_AS(algebra_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json("{\"name\":\"x\"}"), std::invalid_argument);
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"name":"x","group":{"orders":[2]},"basis":["a"],"deg":[[0,0]],"mult":[[0,0,5,"1"]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"name":"x","group":{"orders":[2]},"basis":["a"],"deg":[[0,3]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"name":"x","group":{"orders":[0]},"basis":[],"deg":[]})"),
      std::invalid_argument);
}

TEST_CASE("parity bit optional on input, canonical on output") {
  GradedAlgebra a = algebra_from_json(
      R"({"name":"t","group":{"orders":[2]},"basis":["a","b"],
          "deg":[[1],[1,1]],
          "mult":[[0,0,1,"1/2"]]})");
  CHECK(a.degree[0].parity == 0);
  CHECK(a.degree[1].parity == 1);
  CHECK(a.mult[0][0][0].second == Rat(1, 2));
  std::string emitted = algebra_to_json(a);
  GradedAlgebra again = algebra_from_json(emitted);
  CHECK(again.degree == a.degree);
}

TEST_CASE("report emitters are deterministic") {
  CatalogEntry fc2 = catalog_build("catalog:A2(2)@Z2");
  EnvelopeContext ctx(fc2.body);
  auto reports = codim_sequence(ctx, 3);
  std::string j1 = codim_json(fc2.group, "catalog:A2(2)@Z2", reports);
  std::string j2 = codim_json(fc2.group, "catalog:A2(2)@Z2", codim_sequence(ctx, 3));
  CHECK(j1 == j2);
  std::string csv = codim_csv(fc2.group, reports);
  CHECK(csv.rfind("n,tuple,c,cz,cdelta\n", 0) == 0);
  CHECK(csv.find("3,TOTAL,8,0,8") != std::string::npos);
}
