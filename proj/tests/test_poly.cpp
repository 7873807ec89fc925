#include <doctest.h>

#include "gpi/poly.hpp"

using namespace gpi;

namespace {

LabelMap z2_labels() { return LabelMap{parse_group("Z2"), {}}; }
LabelMap z1_labels() { return LabelMap{parse_group("Z1"), {}}; }

}  // namespace

TEST_CASE("parser and emitter") {
  LabelMap lm = z2_labels();
  SUBCASE("commutator expansion") {
    GradedPoly p = parse_poly("[x1:1, x2:1]", lm);
    REQUIRE(p.terms.size() == 2);
    CHECK(emit_poly(p, lm) == "x1:1 x2:1 - x2:1 x1:1");
  }
  SUBCASE("left-normed triple commutator has four terms") {
    GradedPoly p = parse_poly("[x1:1, x2:1, x3:1]", lm);
    CHECK(p.terms.size() == 4);
    for (const auto& [w, c] : p.terms) CHECK((c == 1 || c == -1));
    // [[x1,x2],x3] expanded directly
    GradedPoly q = poly_commutator(
        poly_commutator(poly_var(lm.group, 1, lm.group.identity()),
                        poly_var(lm.group, 2, lm.group.identity())),
        poly_var(lm.group, 3, lm.group.identity()));
    CHECK(p.terms == q.terms);
  }
  SUBCASE("anticommutator") {
    GradedPoly p = parse_poly("ac(x1:g, x2:g)", lm);
    CHECK(emit_poly(p, lm) == "x1:g x2:g + x2:g x1:g");
  }
  SUBCASE("rational coefficients and residue labels") {
    GradedPoly p = parse_poly("1/2 x1:(1) x2:g - 3 x2:g x1:1", lm);
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms[0].second == Rat(1, 2));
    CHECK(p.terms[1].second == Rat(-3));
  }
  SUBCASE("round trips") {
    for (const char* text :
         {"[x1:1, x2:1]", "ac(x1:g, x2:g)", "x1:1 x2:g - x2:g x1:1", "0",
          "2 x1:g x2:g x3:1 + 1/3 x3:1 x1:g x2:g"}) {
      GradedPoly p = parse_poly(text, lm);
      CHECK(parse_poly(emit_poly(p, lm), lm).terms == p.terms);
    }
  }
  SUBCASE("syntax errors carry positions") {
    CHECK_THROWS_WITH_AS(parse_poly("x1", lm), doctest::Contains("position"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x1:q", lm), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("[x1:1]", lm), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x1:1 +", lm), std::invalid_argument);
  }
}

TEST_CASE("multilinearization") {
  LabelMap lm = z2_labels();
  GroupSpec g = lm.group;
  SUBCASE("multilinear input is unchanged") {
    auto parts = multilinearize(parse_poly("[x1:1, x2:1]", lm));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].n() == 2);
    CHECK(parts[0].terms.size() == 2);
  }
  SUBCASE("square polarizes to the symmetric sum") {
    GradedPoly sq = poly_mul(poly_var(g, 1, g.identity()), poly_var(g, 1, g.identity()));
    auto parts = multilinearize(sq);
    REQUIRE(parts.size() == 1);
    REQUIRE(parts[0].n() == 2);
    REQUIRE(parts[0].terms.size() == 2);
    CHECK(parts[0].terms[0].second == Rat(1));
    CHECK(parts[0].terms[1].second == Rat(1));
  }
  SUBCASE("degree-2-in-one-variable word") {
    // x1^g x2^g x1^g: the multilinear component after polarization has the
    // two interleavings of the fresh copies around the middle variable
    GradedPoly p = parse_poly("x1:g x2:g x1:g", lm);
    auto parts = multilinearize(p);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].n() == 3);
    CHECK(parts[0].terms.size() == 2);
    for (const auto& [w, c] : parts[0].terms) CHECK(c == Rat(1));
  }
  SUBCASE("mixed polynomial splits into multihomogeneous components") {
    GradedPoly p = parse_poly("x1:1 x1:1 + x1:1 x2:g", lm);
    CHECK(multilinearize(p).size() == 2);
  }
}

TEST_CASE("permutation ranking") {
  CHECK(factorial(5) == 120);
  for (int n : {1, 2, 3, 4}) {
    for (long r = 0; r < factorial(n); ++r) CHECK(perm_rank(perm_unrank(n, r)) == r);
  }
  CHECK(perm_rank({0, 1, 2}) == 0);
  CHECK(perm_rank({2, 1, 0}) == 5);
}

TEST_CASE("consequence spans") {
  LabelMap lm = z1_labels();
  GroupSpec g = lm.group;
  SUBCASE("commutator consequences at degree 3") {
    GradedPoly comm = parse_poly("[x1:1, x2:1]", lm);
    DegreeTuple t(3, g.identity());
    PolySubspace s = t_consequences(g, {comm}, t);
    CHECK(s.dim() == 5);  // complement of the symmetric class
    // the span is contained in the kernel of the full symmetrization
    MultilinearPoly sym;
    sym.tuple = t;
    for (long r = 0; r < 6; ++r) sym.terms.emplace_back(perm_unrank(3, r), Rat(1));
    CHECK_FALSE(poly_subspace_contains(s, sym));
  }
  SUBCASE("monomial generator fills its tuple") {
    LabelMap lm2 = z2_labels();
    GradedPoly mono = parse_poly("x1:g x2:g", lm2);
    DegreeTuple t{lm2.group.parse_label("g"), lm2.group.parse_label("g")};
    CHECK(t_consequences(lm2.group, {mono}, t).dim() == 2);
  }
  SUBCASE("monotone and idempotent") {
    LabelMap lm2 = z2_labels();
    GradedPoly comm = parse_poly("[x1:1, x2:1]", lm2);
    GradedPoly mono = parse_poly("x1:1 x2:g", lm2);
    DegreeTuple t{lm2.group.identity(), lm2.group.identity(), lm2.group.parse_label("g")};
    PolySubspace small = t_consequences(lm2.group, {comm}, t);
    PolySubspace big = t_consequences(lm2.group, {comm, mono}, t);
    const int amb = static_cast<int>(factorial(3));
    CHECK(subspace_leq(Subspace{amb, small.basis}, Subspace{amb, big.basis}));
    // adding a consequence of the set does not change the span
    GradedPoly cons = parse_poly("x3:g [x1:1, x2:1]", lm2);
    PolySubspace same = t_consequences(lm2.group, {comm, mono, cons}, t);
    CHECK(big == same);
  }
}

TEST_CASE("product spans") {
  LabelMap lm = z1_labels();
  GroupSpec g = lm.group;
  GradedPoly comm = parse_poly("[x1:1, x2:1]", lm);
  auto left = [&](const DegreeTuple& t) { return t_consequences(g, {comm}, t); };
  auto right = [&](const DegreeTuple& t) {
    // the full T-ideal: every variable on its own is a generator
    GradedPoly var = poly_var(g, 1, g.identity());
    return t_consequences(g, {var}, t);
  };
  DegreeTuple t(3, g.identity());
  PolySubspace prod = product_span(left, right, t);
  // [x,y]z-type elements: compare against the direct enumeration of pairwise
  // products of consequence instances (the independent oracle route)
  SpanBuilder sb(6);
  for (int mask = 1; mask < 7; ++mask) {
    std::vector<int> s, c;
    for (int b = 0; b < 3; ++b)
      (mask & (1 << b) ? s : c).push_back(b);
    if (s.empty() || c.empty()) continue;
    DegreeTuple ts(s.size(), g.identity()), tc(c.size(), g.identity());
    PolySubspace ps = left(ts), qs = right(tc);
    for (const auto& pr : ps.basis)
      for (const auto& qr : qs.basis) {
        RatVec vec = zero_vec(6);
        for (size_t rp = 0; rp < pr.size(); ++rp) {
          if (is_zero(pr[rp])) continue;
          auto wp = perm_unrank(static_cast<int>(s.size()), static_cast<long>(rp));
          for (size_t rq = 0; rq < qr.size(); ++rq) {
            if (is_zero(qr[rq])) continue;
            auto wq = perm_unrank(static_cast<int>(c.size()), static_cast<long>(rq));
            std::vector<int> word;
            for (int x : wp) word.push_back(s[x]);
            for (int x : wq) word.push_back(c[x]);
            vec[perm_rank(word)] += pr[rp] * qr[rq];
          }
        }
        sb.add(std::move(vec));
      }
  }
  Subspace direct = sb.take();
  CHECK(PolySubspace{t, direct.basis} == prod);
  CHECK(prod.dim() > 0);
}

TEST_CASE("poly subspace utilities") {
  LabelMap lm = z2_labels();
  GroupSpec g = lm.group;
  DegreeTuple t{g.identity(), g.parse_label("g")};
  PolySubspace full = poly_subspace_full(t);
  PolySubspace zero = poly_subspace_zero(t);
  CHECK(poly_subspace_sum(full, zero) == full);
  CHECK(poly_subspace_intersection(full, zero) == zero);
  // two differently constructed bases of the same span compare equal
  MultilinearPoly p1;
  p1.tuple = t;
  p1.terms = {{{0, 1}, Rat(2)}, {{1, 0}, Rat(2)}};
  MultilinearPoly p2;
  p2.tuple = t;
  p2.terms = {{{0, 1}, Rat(1)}, {{1, 0}, Rat(1)}};
  PolySubspace s1{t, {mpoly_to_vec(p1)}};
  rref(s1.basis);
  PolySubspace s2{t, {mpoly_to_vec(p2)}};
  rref(s2.basis);
  CHECK(s1 == s2);
  // position relabeling moves a subspace onto the permuted tuple
  PolySubspace moved = permute_positions(s1, {1, 0});
  CHECK(moved.tuple == DegreeTuple{g.parse_label("g"), g.identity()});
  CHECK(moved.dim() == 1);
}
