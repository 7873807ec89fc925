#include "gpi/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gpi/catalog.hpp"
#include "gpi/codim.hpp"
#include "gpi/exponent.hpp"

namespace gpi {

namespace {

struct SuiteBuilder {
  SuiteResult result;
  const BudgetGuard& guard;

  SuiteBuilder(std::string name, int effective_n, const BudgetGuard& g) : guard(g) {
    result.suite = std::move(name);
    result.effective_n = effective_n;
  }

  void add(std::string id, std::string claim, std::string params, int bound, bool pass,
           std::string detail) {
    result.checks.push_back(
        CheckRecord{std::move(id), std::move(claim), std::move(params), bound, pass,
                    std::move(detail)});
  }

  SuiteResult take() {
    result.pass = std::all_of(result.checks.begin(), result.checks.end(),
                              [](const CheckRecord& c) { return c.pass; });
    return std::move(result);
  }
};

std::vector<DegreeTuple> all_tuples(const GroupSpec& g, int n) {
  std::vector<DegreeTuple> out;
  auto elems = g.elements();
  const long s = static_cast<long>(elems.size());
  long total = 1;
  for (int i = 0; i < n; ++i) total *= s;
  for (long t = 0; t < total; ++t) {
    DegreeTuple tuple(n);
    long x = t;
    for (int i = n - 1; i >= 0; --i) {
      tuple[i] = elems[x % s];
      x /= s;
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

std::string describe_difference(const LabelMap& lm, const PolySubspace& a,
                                const PolySubspace& b) {
  // A polynomial in exactly one of the spans.
  const int amb = static_cast<int>(factorial(static_cast<int>(a.tuple.size())));
  Subspace sa{amb, a.basis}, sb{amb, b.basis};
  for (const auto& row : a.basis)
    if (!subspace_contains(sb, row)) {
      GradedPoly p{lm.group, {}};
      MultilinearPoly mp = vec_to_mpoly(a.tuple, row);
      for (const auto& [w, c] : mp.terms) {
        Word word;
        for (int pos : w) word.push_back(Var{pos + 1, a.tuple[pos]});
        p.terms.emplace_back(std::move(word), c);
      }
      p.canonicalize();
      return "only in the first span: " + emit_poly(p, lm);
    }
  for (const auto& row : b.basis)
    if (!subspace_contains(sa, row)) {
      GradedPoly p{lm.group, {}};
      MultilinearPoly mp = vec_to_mpoly(b.tuple, row);
      for (const auto& [w, c] : mp.terms) {
        Word word;
        for (int pos : w) word.push_back(Var{pos + 1, b.tuple[pos]});
        p.terms.emplace_back(std::move(word), c);
      }
      p.canonicalize();
      return "only in the second span: " + emit_poly(p, lm);
    }
  return "";
}

// ---- lemma 3.2 / 3.3 generating sets ---------------------------------------

struct GeneratorCase {
  std::string id;
  std::string algebra;                  // catalog spec
  std::vector<std::string> generators;  // grammar text
};

std::vector<std::string> other_degree_generators(const GroupSpec& g,
                                                 const std::vector<GroupElement>& keep) {
  std::vector<std::string> out;
  for (const auto& e : g.elements()) {
    if (std::find(keep.begin(), keep.end(), e) != keep.end()) continue;
    out.push_back("x1:" + g.label(e));
  }
  return out;
}

std::vector<GeneratorCase> generator_cases(const std::string& family, const GroupSpec& G) {
  const GroupElement one = G.identity();
  const GroupElement g = G.parse_label("g");
  auto with_others = [&](std::vector<std::string> gens,
                         std::vector<GroupElement> keep) {
    for (auto& s : other_degree_generators(G, keep)) gens.push_back(s);
    return gens;
  };
  std::vector<GeneratorCase> cases;
  const std::string gn = "@" + group_name(G);
  if (family == "lemma3.2") {
    cases.push_back({"3.2(1)", "catalog:B1(1,g)" + gn,
                     with_others({"[x1:1, x2:1]", "x1:g x2:g", "x1:1 x2:g"}, {one, g})});
    cases.push_back({"3.2(2)", "catalog:B2(1,1,g)" + gn,
                     with_others({"[x1:1, x2:1, x3:1]", "x1:g x2:g", "x1:g x2:1"}, {one, g})});
    cases.push_back({"3.2(3)", "catalog:B1(1,1)" + gn,
                     with_others({"x1:1 [x2:1, x3:1]"}, {one})});
    cases.push_back({"3.2(4)", "catalog:B2(1,1,1)" + gn,
                     with_others({"[x1:1, x2:1, x3:1] x4:1"}, {one})});
  } else {
    cases.push_back({"3.3(1)", "catalog:C1(1,g,g)" + gn,
                     with_others({"[x1:1, x2:1, x3:1]", "x1:g x2:g", "x1:1 x2:g"}, {one, g})});
    cases.push_back({"3.3(2)", "catalog:C2(1,g)" + gn,
                     with_others({"[x1:1, x2:1]", "x1:g x2:g", "x1:g x2:1"}, {one, g})});
    cases.push_back({"3.3(3)", "catalog:C1(1,1,1)" + gn,
                     with_others({"x1:1 [x2:1, x3:1, x4:1]"}, {one})});
    cases.push_back({"3.3(4)", "catalog:C2(1,1)" + gn,
                     with_others({"[x1:1, x2:1] x3:1"}, {one})});
  }
  return cases;
}

void run_generator_case(SuiteBuilder& sb, const GeneratorCase& c, int N) {
  CatalogEntry entry = catalog_build(c.algebra);
  EnvelopeContext ctx(entry.body);
  LabelMap lm{entry.group, {}};
  std::vector<GradedPoly> gens;
  for (const auto& text : c.generators) gens.push_back(parse_poly(text, lm));
  // (a) every generator is an identity
  for (size_t i = 0; i < gens.size(); ++i) {
    bool ok = is_identity(ctx, gens[i]);
    sb.add(c.id + ".gen" + std::to_string(i + 1), "generator is an identity",
           c.algebra + " ; " + c.generators[i], 0, ok, ok ? "" : "non-identity generator");
  }
  // (b) consequence span equals the identity kernel on every tuple
  for (int n = 1; n <= N; ++n) {
    sb.guard.check("generator suite");
    long checked = 0;
    std::string counterexample;
    for (const auto& tuple : all_tuples(entry.group, n)) {
      PolySubspace cons = t_consequences(entry.group, gens, tuple);
      PolySubspace kern = identity_kernel(ctx, tuple);
      ++checked;
      if (!(cons == kern)) {
        counterexample = "tuple " + tuple_str(entry.group, tuple) + ": span dim " +
                         std::to_string(cons.dim()) + " vs kernel dim " +
                         std::to_string(kern.dim()) + "; " +
                         describe_difference(lm, cons, kern);
        break;
      }
    }
    sb.add(c.id + ".n" + std::to_string(n),
           "consequence span equals identity kernel on all degree tuples", c.algebra, n,
           counterexample.empty(),
           counterexample.empty() ? std::to_string(checked) + " tuples" : counterexample);
    if (!counterexample.empty()) break;
  }
}

SuiteResult suite_generators(const std::string& family, int max_degree,
                             const BudgetGuard& guard) {
  const int N = std::clamp(max_degree, 1, 4);
  SuiteBuilder sb(family, N, guard);
  GroupSpec G = parse_group("Z4");
  for (const auto& c : generator_cases(family, G)) run_generator_case(sb, c, N);
  return sb.take();
}

// ---- products of T-ideals ---------------------------------------------------

SubspaceProvider consequence_provider(const GroupSpec& G, std::vector<GradedPoly> gens) {
  return [G, gens = std::move(gens)](const DegreeTuple& t) {
    return t_consequences(G, gens, t);
  };
}

std::vector<GradedPoly> parse_all(const LabelMap& lm, const std::vector<std::string>& texts) {
  std::vector<GradedPoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, lm));
  return out;
}

SuiteResult suite_product_tideal(int max_degree, const BudgetGuard& guard) {
  const int N = std::clamp(max_degree, 1, 3);
  SuiteBuilder sb("prop3.5", N, guard);
  GroupSpec G = parse_group("Z2");
  LabelMap lm{G, {}};

  struct ProductCase {
    std::string id;
    std::string target;  // catalog spec
    std::vector<std::string> left_gens, right_gens;
    std::string left_alg, right_alg;
  };
  std::vector<ProductCase> cases{
      {"3.5(1)",
       "catalog:A9(g,g,g)@Z2",
       {"[x1:1, x2:1]", "x1:g x2:g", "x1:1 x2:g"},
       {"[x1:1, x2:1, x3:1]", "x1:g x2:g", "x1:g x2:1"},
       "catalog:B1(1,g)@Z2",
       "catalog:B2(1,1,g)@Z2"},
      {"3.5(2)",
       "catalog:A10(g,g,g)@Z2",
       {"[x1:1, x2:1, x3:1]", "x1:g x2:g", "x1:1 x2:g"},
       {"[x1:1, x2:1]", "x1:g x2:g", "x1:g x2:1"},
       "catalog:C1(1,g,g)@Z2",
       "catalog:C2(1,g)@Z2"},
  };

  for (const auto& pc : cases) {
    CatalogEntry target = catalog_build(pc.target);
    EnvelopeContext tctx(target.body);
    std::vector<GradedPoly> lg = parse_all(lm, pc.left_gens);
    std::vector<GradedPoly> rg = parse_all(lm, pc.right_gens);
    // Factor generating sets verified first (bounded degree).
    for (auto [alg, gens] : {std::pair{pc.left_alg, &lg}, std::pair{pc.right_alg, &rg}}) {
      CatalogEntry factor = catalog_build(alg);
      EnvelopeContext fctx(factor.body);
      bool ok = true;
      std::string detail;
      for (int n = 1; n <= N && ok; ++n) {
        for (const auto& tuple : all_tuples(G, n)) {
          PolySubspace cons = t_consequences(G, *gens, tuple);
          PolySubspace kern = identity_kernel(fctx, tuple);
          if (!(cons == kern)) {
            ok = false;
            detail = "factor mismatch at tuple " + tuple_str(G, tuple);
            break;
          }
        }
      }
      sb.add(pc.id + ".factor." + alg, "factor generating set reproduces its kernels", alg, N,
             ok, detail);
    }
    SubspaceProvider left = consequence_provider(G, lg);
    SubspaceProvider right = consequence_provider(G, rg);
    bool ok = true;
    std::string detail;
    long checked = 0;
    for (int n = 1; n <= N && ok; ++n) {
      sb.guard.check("product T-ideal suite");
      for (const auto& tuple : all_tuples(G, n)) {
        PolySubspace prod = product_span(left, right, tuple);
        PolySubspace kern = identity_kernel(tctx, tuple);
        ++checked;
        if (!(prod == kern)) {
          ok = false;
          detail = "tuple " + tuple_str(G, tuple) + ": product dim " +
                   std::to_string(prod.dim()) + " vs kernel dim " + std::to_string(kern.dim()) +
                   "; " + describe_difference(lm, prod, kern);
          break;
        }
      }
    }
    sb.add(pc.id, "identity kernels equal the product of the factor T-ideals", pc.target, N, ok,
           ok ? std::to_string(checked) + " tuples" : detail);

    // Mutation control: a different target must disagree somewhere.
    {
      CatalogEntry other = catalog_build(pc.id == "3.5(1)" ? "catalog:A6(g,g,g)@Z2"
                                                           : "catalog:B1(1,g)@Z2");
      EnvelopeContext octx(other.body);
      bool diff = false;
      std::string where;
      for (int n = 1; n <= N && !diff; ++n) {
        for (const auto& tuple : all_tuples(G, n)) {
          PolySubspace prod = product_span(left, right, tuple);
          PolySubspace kern = identity_kernel(octx, tuple);
          if (!(prod == kern)) {
            diff = true;
            where = "tuple " + tuple_str(G, tuple);
            break;
          }
        }
      }
      sb.add(pc.id + ".mutation", "product formula detects a substituted algebra", other.id, N,
             diff, diff ? "difference at " + where : "no difference found (control failed)");
    }
  }

  // Recorded finding: over Z2xZ2 with block degrees (g,h,g), the bilinear
  // component at (g,g) separates the envelope kernel from the product ideal.
  {
    GroupSpec G4 = parse_group("Z2xZ2");
    LabelMap lm4{G4, {}};
    CatalogEntry a9 = catalog_build("catalog:A9(g,h,g)@Z2xZ2");
    EnvelopeContext ctx(a9.body);
    std::vector<GradedPoly> lg =
        parse_all(lm4, {"[x1:1, x2:1]", "x1:g x2:g", "x1:1 x2:g", "x1:h", "x1:gh"});
    std::vector<GradedPoly> rg =
        parse_all(lm4, {"[x1:1, x2:1, x3:1]", "x1:g x2:g", "x1:g x2:1", "x1:h", "x1:gh"});
    DegreeTuple t{G4.parse_label("g"), G4.parse_label("g")};
    PolySubspace prod = product_span(consequence_provider(G4, lg), consequence_provider(G4, rg), t);
    PolySubspace kern = identity_kernel(ctx, t);
    bool differs = !(prod == kern);
    sb.add("3.5.scope", "recorded scope note for the product identity",
           "catalog:A9(g,h,g)@Z2xZ2 at tuple (g,g)", 2, true,
           differs ? "kernel dim " + std::to_string(kern.dim()) + " vs product dim " +
                         std::to_string(prod.dim()) +
                         ": the bilinear component separates the two sides for this grading"
                   : "sides agree for this grading");
  }
  return sb.take();
}

// ---- parity-variant equalities ---------------------------------------------

SuiteResult suite_remark_equalities(int max_degree, const BudgetGuard& guard) {
  const int N = std::clamp(max_degree, 1, 3);
  SuiteBuilder sb("remark3.6", N, guard);
  GroupSpec G = parse_group("Z2");
  LabelMap lm{G, {}};
  auto family_check = [&](const std::string& base, const std::vector<std::string>& variants) {
    CatalogEntry b = catalog_build(base);
    EnvelopeContext bctx(b.body);
    for (const auto& var : variants) {
      CatalogEntry v = catalog_build(var);
      EnvelopeContext vctx(v.body);
      bool ok = true;
      std::string detail;
      long checked = 0;
      for (int n = 1; n <= N && ok; ++n) {
        sb.guard.check("variant equality suite");
        for (const auto& tuple : all_tuples(G, n)) {
          PolySubspace kb = identity_kernel(bctx, tuple);
          PolySubspace kv = identity_kernel(vctx, tuple);
          ++checked;
          if (!(kb == kv)) {
            ok = false;
            detail = "tuple " + tuple_str(G, tuple) + ": " + describe_difference(lm, kb, kv);
            break;
          }
        }
      }
      sb.add("3.6." + var, "variant has the same identity kernels as the base", base + " vs " + var,
             N, ok, ok ? std::to_string(checked) + " tuples" : detail);
    }
  };
  family_check("catalog:A9(g,g,g)@Z2",
               {"catalog:A9_1(g,g,g)@Z2", "catalog:A9_2(g,g,g)@Z2", "catalog:A9_3(g,g,g)@Z2"});
  family_check("catalog:A10(g,g,g)@Z2",
               {"catalog:A10_1(g,g,g)@Z2", "catalog:A10_2(g,g,g)@Z2", "catalog:A10_3(g,g,g)@Z2"});
  // Mutation control: the two block families must differ somewhere.
  {
    CatalogEntry a = catalog_build("catalog:A9(g,g,g)@Z2");
    CatalogEntry b = catalog_build("catalog:A10(g,g,g)@Z2");
    EnvelopeContext actx(a.body), bctx(b.body);
    bool diff = false;
    std::string where;
    for (int n = 1; n <= N && !diff; ++n) {
      for (const auto& tuple : all_tuples(G, n)) {
        if (!(identity_kernel(actx, tuple) == identity_kernel(bctx, tuple))) {
          diff = true;
          where = tuple_str(G, tuple);
          break;
        }
      }
    }
    sb.add("3.6.mutation", "the A9 and A10 families are distinguished", a.id + " vs " + b.id, N,
           diff, diff ? "difference at tuple " + where : "no difference found (control failed)");
  }
  return sb.take();
}

// ---- triangular construction checks ----------------------------------------

GradedAlgebra truncated_cycle_algebra(const GroupSpec& G, int k, int cap,
                                      const ExtendedDegree& arrow_deg, std::string name) {
  GradedAlgebra a;
  a.name = std::move(name);
  a.group = G;
  a.dim = k * (cap + 1);
  a.mult.assign(a.dim, std::vector<std::vector<std::pair<int, Rat>>>(a.dim));
  auto idx = [&](int v, int len) { return v * (cap + 1) + len; };
  for (int v = 0; v < k; ++v) {
    for (int len = 0; len <= cap; ++len) {
      a.basis.push_back("p" + std::to_string(v + 1) + "_" + std::to_string(len));
      ExtendedDegree d = ext_identity(G);
      for (int t = 0; t < len; ++t) d = ext_mul(G, d, arrow_deg);
      a.degree.push_back(d);
    }
  }
  for (int v = 0; v < k; ++v)
    for (int l1 = 0; l1 <= cap; ++l1)
      for (int l2 = 0; l1 + l2 <= cap; ++l2)
        a.set_entry(idx(v, l1), idx((v + l1) % k, l2), idx(v, l1 + l2), Rat(1));
  a.detect_unit();
  return a;
}

struct S4Host {
  std::string name;
  GradedAlgebra host;
  RatMat generators;        // generating set of the graded subalgebra
  RatMat listed;            // claimed basis mod the kernel ideal
  RatMat kernel_gens;       // generators of the kernel ideal (may be empty)
  RatVec hypothesis;        // must be nonzero
  GradedAlgebra model;      // catalog body the quotient must match
  std::vector<int> model_index;
  bool mutation = false;    // rerun with the kernel ideal dropped, expecting detection
};

RatVec basis_vec(const GradedAlgebra& a, const std::string& label) {
  for (int i = 0; i < a.dim; ++i)
    if (a.basis[i] == label) {
      RatVec v = zero_vec(a.dim);
      v[i] = 1;
      return v;
    }
  throw std::logic_error("missing label " + label + " in " + a.name);
}

RatVec mul_chain(const GradedAlgebra& a, const std::vector<RatVec>& xs) {
  RatVec v = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) v = a.mul(v, xs[i]);
  return v;
}

// Coordinates of v in the row space of `rows` (nullopt if outside).
std::optional<RatVec> coords_in(const RatMat& rows, const RatVec& v) {
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(v.size());
  RatMat aug;
  for (int c = 0; c < n; ++c) {
    RatVec row(m + 1, Rat(0));
    for (int r = 0; r < m; ++r) row[r] = rows[r][c];
    row[m] = v[c];
    aug.push_back(std::move(row));
  }
  rref(aug);
  RatVec coeff(m, Rat(0));
  for (const auto& row : aug) {
    int p = -1;
    for (int c = 0; c <= m; ++c)
      if (!is_zero(row[c])) {
        p = c;
        break;
      }
    if (p == m) return std::nullopt;
    if (p >= 0) coeff[p] = row[m];
  }
  return coeff;
}

void run_s4_host(SuiteBuilder& sb, const std::string& case_id, const S4Host& h) {
  const GradedAlgebra& A = h.host;
  std::string tag = case_id + "." + h.name;
  ValidationReport vr = validate_algebra(A);
  sb.add(tag + ".host", "host algebra validates", A.name, 0, vr.ok, vr.message);
  if (!vr.ok) return;
  bool hyp = !is_zero_vec(h.hypothesis);
  sb.add(tag + ".hyp", "hypothesis product is nonzero", "", 0, hyp, "");
  if (!hyp) return;

  Subspace gen = subalgebra_generated(A, h.generators);
  Subspace ideal = h.mutation ? zero_subspace(A.dim)
                              : (h.kernel_gens.empty() ? zero_subspace(A.dim)
                                                       : ideal_generated_within(A, gen, h.kernel_gens));
  const int nl = static_cast<int>(h.listed.size());

  // Independence mod the kernel ideal.
  RatMat stack = h.listed;
  stack.insert(stack.end(), ideal.basis.begin(), ideal.basis.end());
  bool indep = rank_of(stack) == nl + ideal.dim();
  // Spanning: listed + ideal = generated subalgebra.
  RatMat stack2 = h.listed;
  stack2.insert(stack2.end(), ideal.basis.begin(), ideal.basis.end());
  bool spanning = span_of(A.dim, stack2) == gen;
  // Multiplication matches the model, and degrees agree.
  bool model_ok = true;
  std::string model_detail;
  RatMat reducers = h.listed;
  reducers.insert(reducers.end(), ideal.basis.begin(), ideal.basis.end());
  for (int k = 0; k < nl && model_ok; ++k) {
    // Degrees: listed element must be homogeneous with the model degree.
    ExtendedDegree want = h.model.degree[h.model_index[k]];
    for (int c = 0; c < A.dim; ++c) {
      if (!is_zero(h.listed[k][c]) && !(A.degree[c] == want)) {
        model_ok = false;
        model_detail = "degree mismatch at listed element " + std::to_string(k);
      }
    }
  }
  for (int k = 0; k < nl && model_ok; ++k) {
    for (int l = 0; l < nl && model_ok; ++l) {
      RatVec prod = A.mul(h.listed[k], h.listed[l]);
      auto coords = coords_in(reducers, prod);
      if (!coords) {
        model_ok = false;
        model_detail = "product of listed elements escapes the span (closure failure)";
        break;
      }
      RatVec in_model = zero_vec(h.model.dim);
      for (int r = 0; r < nl; ++r) in_model[h.model_index[r]] = (*coords)[r];
      RatVec ek = zero_vec(h.model.dim), el = zero_vec(h.model.dim);
      ek[h.model_index[k]] = 1;
      el[h.model_index[l]] = 1;
      if (h.model.mul(ek, el) != in_model) {
        model_ok = false;
        model_detail = "structure constants differ from the model at pair (" +
                       std::to_string(k) + "," + std::to_string(l) + ")";
      }
    }
  }
  if (h.mutation) {
    bool detected = !(indep && spanning && model_ok);
    sb.add(tag, "degenerate run without the kernel ideal is detected", "", 0, detected,
           detected ? "dependence/mismatch detected as expected"
                    : "control failed: nothing detected");
  } else {
    sb.add(tag + ".indep", "listed elements independent mod the kernel ideal",
           std::to_string(nl) + " elements, ideal dim " + std::to_string(ideal.dim()), 0, indep,
           "");
    sb.add(tag + ".span", "listed elements + ideal span the generated subalgebra",
           "generated dim " + std::to_string(gen.dim()), 0, spanning, "");
    sb.add(tag + ".model", "quotient embeds into the model with matching degrees", h.model.name,
           0, model_ok, model_detail);
  }
}

SuiteResult suite_section4(const BudgetGuard& guard) {
  SuiteBuilder sb("section4", 0, guard);
  GroupSpec G = parse_group("Z2");
  const ExtendedDegree gdeg{G.parse_label("g"), 0};

  // 4.1 on the block body itself (kernel ideal vanishes).
  {
    CatalogEntry a6 = catalog_build("catalog:A6(g,1,g)@Z2");
    const GradedAlgebra& A = a6.body;
    auto B = [&](const char* l) { return basis_vec(A, l); };
    S4Host h;
    h.name = "own-body";
    h.host = A;
    RatVec e1 = B("u1"), e2 = B("e22"), e3 = B("e33");
    RatVec j1 = B("e12"), j2 = B("e23"), j3 = B("e34");
    h.generators = {e1, e2, e3, mul_chain(A, {e1, j1, e2}), mul_chain(A, {e2, j2, e3}),
                    mul_chain(A, {e3, j3, e1})};
    h.listed = {e1,
                e2,
                e3,
                mul_chain(A, {e1, j1, e2}),
                mul_chain(A, {e2, j2, e3}),
                mul_chain(A, {e3, j3, e1}),
                mul_chain(A, {e1, j1, e2, j2, e3}),
                mul_chain(A, {e2, j2, e3, j3, e1}),
                mul_chain(A, {e1, j1, e2, j2, e3, j3, e1})};
    h.kernel_gens = {mul_chain(A, {e3, j3, e1, j1, e2})};
    h.hypothesis = mul_chain(A, {e1, j1, e2, j2, e3, j3, e1});
    h.model = A;
    h.model_index = {0, 1, 2, 3, 5, 8, 4, 7, 6};
    // model_index is recomputed below from labels for robustness
    std::vector<std::string> labels{"u1", "e22", "e33", "e12", "e23", "e34", "e13", "e24", "e14"};
    h.model_index.clear();
    for (const auto& l : labels)
      for (int i = 0; i < A.dim; ++i)
        if (A.basis[i] == l) h.model_index.push_back(i);
    run_s4_host(sb, "4.1", h);
  }
  // 4.1 on the truncated cycle host (nonzero kernel ideal), plus mutation.
  for (bool mutation : {false, true}) {
    GradedAlgebra host = truncated_cycle_algebra(G, 3, 3, gdeg, "cycle3");
    auto P = [&](const char* l) { return basis_vec(host, l); };
    // p{v}_{len}: the unique path of that length starting at vertex v.
    RatVec e1 = P("p1_0"), e2 = P("p2_0"), e3 = P("p3_0");
    RatVec a = P("p1_1"), b = P("p2_1"), c = P("p3_1");
    S4Host h;
    h.name = mutation ? "cycle-mutation" : "cycle";
    h.host = host;
    h.generators = {e1, e2, e3, a, b, c};
    h.listed = {e1, e2, e3, a, b, c, P("p1_2"), P("p2_2"), P("p1_3")};
    h.kernel_gens = {host.mul(c, a)};
    h.hypothesis = mul_chain(host, {a, b, c});
    h.model = catalog_build("catalog:A6(g,g,g)@Z2").body;
    std::vector<std::string> labels{"u1", "e22", "e33", "e12", "e23", "e34", "e13", "e24", "e14"};
    h.model_index.clear();
    for (const auto& l : labels)
      for (int i = 0; i < h.model.dim; ++i)
        if (h.model.basis[i] == l) h.model_index.push_back(i);
    h.mutation = mutation;
    run_s4_host(sb, "4.1", h);
  }
  // 4.2 on the block body itself.
  {
    CatalogEntry a7 = catalog_build("catalog:A7(g,g,g,g)@Z2");
    const GradedAlgebra& A = a7.body;
    auto B = [&](const char* l) { return basis_vec(A, l); };
    S4Host h;
    h.name = "own-body";
    h.host = A;
    RatVec e1 = B("e22"), e2 = B("e33"), e3 = B("e44");
    RatVec j1 = B("e12"), j2 = B("e23"), j3 = B("e34"), j4 = B("e45");
    RatVec j1e1 = A.mul(j1, e1), e1j2e2 = mul_chain(A, {e1, j2, e2});
    RatVec e2j3e3 = mul_chain(A, {e2, j3, e3}), e3j4 = A.mul(e3, j4);
    h.generators = {e1, e2, e3, j1e1, e1j2e2, e2j3e3, e3j4};
    h.listed = {e1,
                e2,
                e3,
                j1e1,
                e1j2e2,
                e2j3e3,
                e3j4,
                A.mul(j1e1, e1j2e2),
                A.mul(e1j2e2, e2j3e3),
                A.mul(e2j3e3, e3j4),
                mul_chain(A, {j1e1, e1j2e2, e2j3e3}),
                mul_chain(A, {e1j2e2, e2j3e3, e3j4}),
                mul_chain(A, {j1e1, e1j2e2, e2j3e3, e3j4})};
    h.kernel_gens = {mul_chain(A, {e3, j4, e1}),       mul_chain(A, {e3, j4, e2}),
                     mul_chain(A, {e3, j4, e3}),       mul_chain(A, {e3, j4, j1, e1}),
                     mul_chain(A, {e3, j1, e1}),       mul_chain(A, {e2, j1, e1}),
                     mul_chain(A, {e1, j1, e1})};
    h.hypothesis = mul_chain(A, {j1e1, e1j2e2, e2j3e3, e3j4});
    h.model = A;
    std::vector<std::string> labels{"e22", "e33", "e44", "e12", "e23", "e34", "e45",
                                    "e13", "e24", "e35", "e14", "e25", "e15"};
    for (const auto& l : labels)
      for (int i = 0; i < A.dim; ++i)
        if (A.basis[i] == l) h.model_index.push_back(i);
    run_s4_host(sb, "4.2", h);
  }
  // 4.2 on a four-vertex cycle host with a nonzero kernel ideal.
  for (bool mutation : {false, true}) {
    GradedAlgebra host = truncated_cycle_algebra(G, 4, 4, gdeg, "cycle4");
    auto P = [&](const char* l) { return basis_vec(host, l); };
    // vertices: 1 = w, 2, 3, 4; arrows p{v}_1 from vertex v.
    RatVec e1 = P("p2_0"), e2 = P("p3_0"), e3 = P("p4_0");
    RatVec j1 = P("p1_1"), j2 = P("p2_1"), j3 = P("p3_1"), j4 = P("p4_1");
    S4Host h;
    h.name = mutation ? "cycle-mutation" : "cycle";
    h.host = host;
    RatVec j1e1 = host.mul(j1, e1);
    RatVec e1j2e2 = mul_chain(host, {e1, j2, e2});
    RatVec e2j3e3 = mul_chain(host, {e2, j3, e3});
    RatVec e3j4 = host.mul(e3, j4);
    h.generators = {e1, e2, e3, j1e1, e1j2e2, e2j3e3, e3j4};
    h.listed = {e1,
                e2,
                e3,
                j1e1,
                e1j2e2,
                e2j3e3,
                e3j4,
                host.mul(j1e1, e1j2e2),
                host.mul(e1j2e2, e2j3e3),
                host.mul(e2j3e3, e3j4),
                mul_chain(host, {j1e1, e1j2e2, e2j3e3}),
                mul_chain(host, {e1j2e2, e2j3e3, e3j4}),
                mul_chain(host, {j1e1, e1j2e2, e2j3e3, e3j4})};
    h.kernel_gens = {mul_chain(host, {e3, j4, e1}), mul_chain(host, {e3, j4, e2}),
                     mul_chain(host, {e3, j4, e3}), mul_chain(host, {e3, j4, j1, e1}),
                     mul_chain(host, {e3, j1, e1}), mul_chain(host, {e2, j1, e1}),
                     mul_chain(host, {e1, j1, e1})};
    h.hypothesis = mul_chain(host, {j1e1, e1j2e2, e2j3e3, e3j4});
    h.model = catalog_build("catalog:A7(g,g,g,g)@Z2").body;
    std::vector<std::string> labels{"e22", "e33", "e44", "e12", "e23", "e34", "e45",
                                    "e13", "e24", "e35", "e14", "e25", "e15"};
    for (const auto& l : labels)
      for (int i = 0; i < h.model.dim; ++i)
        if (h.model.basis[i] == l) h.model_index.push_back(i);
    h.mutation = mutation;
    run_s4_host(sb, "4.2", h);
  }
  // 4.3 .. 4.6 on the corresponding block bodies.
  auto own_body_case = [&](const std::string& id, const std::string& spec,
                           const std::vector<std::vector<std::string>>& gen_chains,
                           const std::vector<std::vector<std::string>>& listed_chains,
                           const std::vector<std::vector<std::string>>& kernel_chains,
                           const std::vector<std::string>& hypothesis_chain,
                           const std::vector<std::string>& model_labels) {
    CatalogEntry entry = catalog_build(spec);
    const GradedAlgebra& A = entry.body;
    auto chain = [&](const std::vector<std::string>& labels) {
      std::vector<RatVec> xs;
      for (const auto& l : labels) xs.push_back(basis_vec(A, l));
      return mul_chain(A, xs);
    };
    S4Host h;
    h.name = "own-body";
    h.host = A;
    for (const auto& c : gen_chains) h.generators.push_back(chain(c));
    for (const auto& c : listed_chains) h.listed.push_back(chain(c));
    for (const auto& c : kernel_chains) h.kernel_gens.push_back(chain(c));
    h.hypothesis = chain(hypothesis_chain);
    h.model = A;
    for (const auto& l : model_labels)
      for (int i = 0; i < A.dim; ++i)
        if (A.basis[i] == l) h.model_index.push_back(i);
    run_s4_host(sb, id, h);
  };
  // 4.3: e1 = b0, e2 = a0, c e2 = a1, j1 = z0 (middle -> corner), j2 = x0.
  own_body_case("4.3", "catalog:A8(g,g)@Z2",
                {{"b0"}, {"a0"}, {"a1"}, {"b0", "z0", "a0"}, {"a0", "x0", "b0"}},
                {{"b0"},
                 {"a0"},
                 {"a1"},
                 {"b0", "z0", "a0"},
                 {"a0", "x0", "b0"},
                 {"z0", "a1"},
                 {"a1", "x0"},
                 {"x0", "z0"},
                 {"a1", "x0", "z0"}},
                {{"z0", "x0"}, {"z0", "a1", "x0"}},
                {"x0", "z0"},
                {"b0", "a0", "a1", "z0", "x0", "z1", "x1", "y0", "y1"});
  // 4.4: e1 = e22, e2 = u, c e2 = v, j1 = e12, j2 = e23, j3 = e35.
  own_body_case("4.4", "catalog:A9(g,g,g)@Z2",
                {{"e22"}, {"u"}, {"v"}, {"e12", "e22"}, {"e22", "e23", "u"}, {"u", "e35"}},
                {{"e22"},
                 {"u"},
                 {"v"},
                 {"e12"},
                 {"e23"},
                 {"e35"},
                 {"e12", "e23"},
                 {"e12", "e23", "v"},
                 {"e12", "e23", "e35"},
                 {"e23", "v"},
                 {"e23", "e35"},
                 {"v", "e35"}},
                {},
                {"e12", "e23", "e35"},
                {"e22", "u", "v", "e12", "e23", "e35", "e13", "e14", "e15", "e24", "e25", "e45"});
  // 4.5: e1 = e44, e2 = u, c e2 = v, j1 = e12, j2 = e24, j3 = e45.
  own_body_case("4.5", "catalog:A10(g,g,g)@Z2",
                {{"e44"}, {"u"}, {"v"}, {"e12", "u"}, {"u", "e24", "e44"}, {"e44", "e45"}},
                {{"e44"},
                 {"u"},
                 {"v"},
                 {"e12"},
                 {"e24"},
                 {"e45"},
                 {"e12", "v"},
                 {"v", "e24"},
                 {"e12", "e24"},
                 {"e12", "e24", "e45"},
                 {"e24", "e45"},
                 {"v", "e24", "e45"}},
                {},
                {"e12", "e24", "e45"},
                {"e44", "u", "v", "e12", "e24", "e45", "e13", "e34", "e14", "e15", "e25", "e35"});
  // 4.6: e1 = a, e2 = u, c e2 = v, j1 = e12, j2 = e24.
  own_body_case("4.6", "catalog:A11(g,g)@Z2",
                {{"a"}, {"u"}, {"v"}, {"a", "e12", "u"}, {"u", "e24", "a"}},
                {{"a"},
                 {"u"},
                 {"v"},
                 {"e12"},
                 {"e24"},
                 {"e12", "v"},
                 {"v", "e24"},
                 {"e12", "e24"}},
                {{"e24", "e12"}, {"e12", "v", "e24"}},
                {"e12", "e24"},
                {"a", "u", "v", "e12", "e24", "e13", "e34", "e14"});
  return sb.take();
}

// ---- separating witnesses ---------------------------------------------------

SuiteResult suite_witnesses(const BudgetGuard& guard) {
  SuiteBuilder sb("prop5.4", 0, guard);
  int k = 0;
  for (const auto& w : witness_table()) {
    ++k;
    sb.guard.check("witness suite");
    CatalogEntry holds = catalog_build("catalog:" + w.holds_in);
    CatalogEntry fails = catalog_build("catalog:" + w.fails_in);
    EnvelopeContext hctx(holds.body), fctx(fails.body);
    LabelMap lm{holds.group, {}};
    GradedPoly p = parse_poly(w.poly, lm);
    bool is_id_holds = is_identity(hctx, p);
    LabelMap lmf{fails.group, {}};
    GradedPoly pf = parse_poly(w.poly, lmf);
    bool is_id_fails = is_identity(fctx, pf);
    bool ok = is_id_holds && !is_id_fails;
    std::string detail = std::string(is_id_holds ? "identity" : "NOT an identity") + " of " +
                         w.holds_in + "; " + (is_id_fails ? "identity" : "not an identity") +
                         " of " + w.fails_in;
    if (!w.note.empty()) detail += " [" + w.note + "]";
    sb.add("5.4." + std::to_string(k), "witness separates the pair",
           w.poly + " : " + w.holds_in + " vs " + w.fails_in, 0, ok, detail);
  }
  return sb.take();
}

// ---- exponents of the construction list -------------------------------------

SuiteResult suite_thm51(int max_degree, const BudgetGuard& guard) {
  const int N = std::clamp(max_degree, 1, 8);
  SuiteBuilder sb("thm5.1", N, guard);
  struct Inst {
    std::string spec;
    int expect_exp;
    std::optional<int> expect_delta_exact;  // pinned certificates
  };
  std::vector<Inst> instances{
      {"catalog:A1(g,0)@Z2", 4, std::nullopt},
      {"catalog:A2(3)@Z3", 3, 3},
      {"catalog:A3@Z4", 4, std::nullopt},
      {"catalog:A4@Z4", 4, std::nullopt},
      {"catalog:A5(1,1)@Z2xZ2", 4, std::nullopt},
      {"catalog:A6(g,1,g)@Z2", 3, 3},
      {"catalog:A7(g,g,g,g)@Z2", 3, std::nullopt},
      {"catalog:A8(g,g)@Z2", 3, std::nullopt},
      {"catalog:A9(g,g,g)@Z2", 3, std::nullopt},
      {"catalog:A10(g,g,g)@Z2", 3, std::nullopt},
      {"catalog:A11(g,g)@Z2", 3, std::nullopt},
      {"catalog:A12(g,g)@Z2", 3, std::nullopt},
  };
  for (const auto& inst : instances) {
    sb.guard.check("exponent suite");
    CatalogEntry e = catalog_build(inst.spec);
    ExponentReport rep =
        exponent_report(e.body, N, WitnessMode::Template, e.declared_delta, sb.guard);
    bool exp_ok = rep.exp_g == inst.expect_exp && rep.exp_g >= 3;
    std::string detail = "exp = " + std::to_string(rep.exp_g) + ", certificate components (";
    for (size_t i = 0; i < rep.admissible.components.size(); ++i) {
      if (i) detail += ",";
      detail += std::to_string(rep.admissible.components[i]);
    }
    detail += "); delta lower bound " + std::to_string(rep.delta_lower_bound);
    if (rep.delta_exact) detail += ", exact " + std::to_string(*rep.delta_exact);
    sb.add("5.1." + inst.spec, "admissible search yields the declared exponent", inst.spec, N,
           exp_ok, detail);
    sb.add("5.1." + inst.spec + ".consistency", "delta lower bound within the exponent",
           inst.spec, N, rep.delta_le_exp, "");
    if (inst.expect_delta_exact) {
      bool ok = rep.delta_exact && *rep.delta_exact == *inst.expect_delta_exact;
      std::string d;
      if (rep.delta_witness) {
        d = "witness at n = " + std::to_string(rep.delta_witness->n) + " (" +
            rep.delta_witness->verify_method + ", " +
            std::to_string(rep.delta_witness->centrality_evals) + " evaluations)";
      }
      sb.add("5.1." + inst.spec + ".delta", "certified proper central exponent", inst.spec, N, ok,
             d);
    }
  }
  return sb.take();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"lemma3.2", "lemma3.3", "prop3.5", "remark3.6", "section4", "prop5.4", "thm5.1"};
}

SuiteResult run_suite(const std::string& name, int max_degree, unsigned long seed, int jobs,
                      const BudgetGuard& guard) {
  (void)seed;
  (void)jobs;
  if (name == "lemma3.2") return suite_generators("lemma3.2", max_degree, guard);
  if (name == "lemma3.3") return suite_generators("lemma3.3", max_degree, guard);
  if (name == "prop3.5") return suite_product_tideal(max_degree, guard);
  if (name == "remark3.6") return suite_remark_equalities(max_degree, guard);
  if (name == "section4") return suite_section4(guard);
  if (name == "prop5.4") return suite_witnesses(guard);
  if (name == "thm5.1") return suite_thm51(max_degree, guard);
  throw std::invalid_argument("unknown suite: '" + name + "'");
}

}  // namespace gpi
