// Acceptance suite: one line per criterion, exit nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

#include "gpi/catalog.hpp"
#include "gpi/exponent.hpp"
#include "gpi/verify.hpp"

using namespace gpi;

namespace {

int g_failures = 0;

struct Criterion {
  const char* id;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  explicit Criterion(const char* id_) : id(id_) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }

  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("[%s] criterion %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", id,
                static_cast<long long>(ms), detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
};

// Independent identity kernel for a plain (trivially Z2-graded) algebra:
// direct evaluation with no envelope machinery at all.
PolySubspace direct_identity_kernel(const GradedAlgebra& a, const DegreeTuple& tuple) {
  const int n = static_cast<int>(tuple.size());
  const long nf = factorial(n);
  std::vector<std::vector<int>> cand(n);
  for (int i = 0; i < n; ++i) cand[i] = a.basis_of_gdegree(tuple[i]);
  RatMat rows;
  std::vector<int> idx(n, 0);
  for (const auto& c : cand)
    if (c.empty()) return PolySubspace{tuple, nullspace({}, static_cast<int>(nf))};
  while (true) {
    for (int k = 0; k < a.dim; ++k) {
      RatVec row = zero_vec(static_cast<int>(nf));
      bool nz = false;
      for (long r = 0; r < nf; ++r) {
        auto word = perm_unrank(n, r);
        RatVec v = zero_vec(a.dim);
        v[cand[word[0]][idx[word[0]]]] = 1;
        for (int t = 1; t < n; ++t) {
          RatVec e = zero_vec(a.dim);
          e[cand[word[t]][idx[word[t]]]] = 1;
          v = a.mul(v, e);
        }
        if (!is_zero(v[k])) {
          row[r] = v[k];
          nz = true;
        }
      }
      if (nz) rows.push_back(std::move(row));
    }
    int p = n - 1;
    while (p >= 0 && ++idx[p] == static_cast<int>(cand[p].size())) idx[p--] = 0;
    if (p < 0) break;
  }
  return PolySubspace{tuple, nullspace(rows, static_cast<int>(nf))};
}

// Grassmann codimension via the supercommutative oracle: the rank of the
// expansion matrix of the monomial basis at generic elements.
long oracle_codim(const EnvelopeContext& ctx, int n) {
  const GroupSpec& g = ctx.body().group;
  DegreeTuple tuple(n, g.identity());
  const long nf = factorial(n);
  std::map<SuperKey, RatVec> columns;
  for (long r = 0; r < nf; ++r) {
    MultilinearPoly mono;
    mono.tuple = tuple;
    mono.terms = {{perm_unrank(n, r), Rat(1)}};
    for (const auto& [key, c] : oracle_eval(ctx, mono)) {
      auto [it, fresh] = columns.try_emplace(key, zero_vec(static_cast<int>(nf)));
      it->second[r] += c;
    }
  }
  RatMat rows;
  for (auto& [key, col] : columns) rows.push_back(std::move(col));
  return rank_of(std::move(rows));
}

void criterion1_exponents() {
  Criterion c("1-exponents");
  struct Expect {
    const char* spec;
    int exp;
  };
  for (const Expect& e : {Expect{"catalog:A1(g,0)@Z2", 4}, Expect{"catalog:A1(g,1)@Z2", 4},
                          Expect{"catalog:A2(3)@Z3", 3}, Expect{"catalog:A6(g,1,g)@Z2", 3},
                          Expect{"catalog:A7(g,g,g,g)@Z2", 3}, Expect{"catalog:A2(2)@Z2", 2},
                          Expect{"catalog:A2(5)@Z5", 5}}) {
    auto [exp, cert] = admissible_max(catalog_build(e.spec).body);
    c.require(exp == e.exp, std::string(e.spec) + ": exp " + std::to_string(exp) +
                                " != " + std::to_string(e.exp));
    c.require(!is_zero_vec(cert.witness), std::string(e.spec) + ": empty witness");
  }
}

void criterion2_delta_certificates() {
  Criterion c("2-delta-certificates");
  for (int p : {2, 3, 5}) {
    std::string spec = "catalog:A2(" + std::to_string(p) + ")@Z" + std::to_string(p);
    CatalogEntry e = catalog_build(spec);
    ExponentReport rep = exponent_report(e.body, 1, WitnessMode::Template, e.declared_delta);
    c.require(rep.delta_exact && *rep.delta_exact == p,
              spec + ": delta not certified at " + std::to_string(p));
    c.require(rep.delta_witness && rep.delta_witness->n == 1, spec + ": no degree-1 witness");
  }
  CatalogEntry a6 = catalog_build("catalog:A6(1,1,1)@Z1");
  ExponentReport rep = exponent_report(a6.body, 6, WitnessMode::Template, a6.declared_delta);
  c.require(rep.exp_g == 3, "trivially graded corner-identified body: exp != 3");
  c.require(rep.delta_exact && *rep.delta_exact == 3, "delta not certified at 3");
  if (rep.delta_witness) {
    const CentralWitness& w = *rep.delta_witness;
    c.require(w.n == 6, "witness degree != 6");
    c.require(w.poly.terms.size() == 8, "witness is not the commutator-product template");
    c.require(w.verify_method == "exhaustive", "witness not exhaustively verified");
    c.require(w.centrality_evals == 531441, "expected 9^6 centrality evaluations, got " +
                                                std::to_string(w.centrality_evals));
  } else {
    c.require(false, "no witness found");
  }
}

void criterion3_codim_tables() {
  Criterion c("3-codimension-tables");
  {
    CatalogEntry fc2 = catalog_build("catalog:A2(2)@Z2");
    EnvelopeContext ctx(fc2.body);
    auto reports = codim_sequence(ctx, 5);
    long expect = 2;
    for (const auto& rep : reports) {
      c.require(rep.c == expect, "order-2 group algebra: c_" + std::to_string(rep.n) + " = " +
                                     std::to_string(rep.c));
      c.require(rep.cz == 0, "order-2 group algebra: cz != 0");
      expect *= 2;
    }
  }
  {
    CatalogEntry e = catalog_build("catalog:E@Z1");
    EnvelopeContext ctx(e.body);
    auto reports = codim_sequence(ctx, 6);
    long expect = 1;
    for (const auto& rep : reports) {
      c.require(rep.c == expect,
                "Grassmann: c_" + std::to_string(rep.n) + " = " + std::to_string(rep.c));
      expect *= 2;
    }
    for (int n = 1; n <= 4; ++n) {
      long via_oracle = oracle_codim(ctx, n);
      c.require(via_oracle == reports[n - 1].c,
                "oracle disagrees at n = " + std::to_string(n) + ": " +
                    std::to_string(via_oracle));
    }
  }
}

void run_suite_criterion(const char* cid, const char* suite, int bound) {
  Criterion c(cid);
  SuiteResult r = run_suite(suite, bound, 0, 1);
  for (const auto& chk : r.checks)
    c.require(chk.pass, chk.id + ": " + (chk.detail.empty() ? chk.claim : chk.detail));
  c.detail = std::to_string(r.checks.size()) + " checks, effective degree bound " +
             std::to_string(r.effective_n) + (c.detail.empty() ? "" : "; " + c.detail);
}

void criterion8_invariants() {
  Criterion c("8-cross-cutting-invariants");
  for (const char* spec :
       {"catalog:A2(3)@Z3", "catalog:B1(1,g)@Z2", "catalog:A6(g,1,g)@Z2", "catalog:E@Z1",
        "catalog:A4@Z4", "catalog:A9(g,g,g)@Z2", "catalog:A11(g,g)@Z2"}) {
    CatalogEntry entry = catalog_build(spec);
    EnvelopeContext ctx(entry.body);
    int nmax = entry.body.dim > 9 ? 2 : 3;
    auto reports = codim_sequence(ctx, nmax);
    for (const auto& rep : reports) {
      for (const auto& t : rep.tuples) {
        c.require(t.cdelta == t.c - t.cz && t.cdelta >= 0 && t.cz >= 0,
                  std::string(spec) + ": codimension split violated");
      }
      c.require(rep.cdelta == rep.c - rep.cz && rep.cdelta >= 0,
                std::string(spec) + ": total split violated");
    }
    auto support = entry.body.gdegree_support();
    for (const auto& d1 : support)
      for (const auto& d2 : support) {
        DegreeTuple t{d1, d2};
        PolySubspace ik = identity_kernel(ctx, t);
        PolySubspace zk = central_kernel(ctx, t);
        c.require(subspace_leq(Subspace{2, ik.basis}, Subspace{2, zk.basis}),
                  std::string(spec) + ": identity kernel escapes the central kernel");
      }
  }
  // delta lower bounds never exceed the admissible exponent
  for (const char* spec : {"catalog:A2(3)@Z3", "catalog:A6(g,1,g)@Z2", "catalog:A3@Z4",
                           "catalog:E@Z1", "catalog:A11(g,g)@Z2"}) {
    CatalogEntry entry = catalog_build(spec);
    ExponentReport rep = exponent_report(entry.body, 4, WitnessMode::Template, std::nullopt);
    c.require(rep.delta_le_exp, std::string(spec) + ": delta bound exceeds the exponent");
  }
  // envelope evaluation agrees with the direct route on trivially graded
  // bodies
  for (const char* spec : {"catalog:A6(g,1,g)@Z2", "catalog:A7(g,g,g,g)@Z2", "catalog:A3@Z4",
                           "catalog:D(1,g,g)@Z2"}) {
    CatalogEntry entry = catalog_build(spec);
    EnvelopeContext ctx(entry.body);
    auto support = entry.body.gdegree_support();
    for (const auto& d1 : support)
      for (const auto& d2 : support) {
        DegreeTuple t{d1, d2};
        c.require(identity_kernel(ctx, t).basis == direct_identity_kernel(entry.body, t).basis,
                  std::string(spec) + ": envelope and direct evaluation disagree");
      }
  }
}

}  // namespace

int main() {
  criterion1_exponents();
  criterion2_delta_certificates();
  criterion3_codim_tables();
  run_suite_criterion("4-lemma-generating-sets/3.2", "lemma3.2", 3);
  run_suite_criterion("4-lemma-generating-sets/3.3", "lemma3.3", 3);
  run_suite_criterion("5-product-ideals", "prop3.5", 3);
  run_suite_criterion("5-variant-equalities", "remark3.6", 3);
  run_suite_criterion("6-separating-witnesses", "prop5.4", 3);
  run_suite_criterion("7-construction-checks", "section4", 3);
  criterion8_invariants();
  if (g_failures) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all criteria passed\n");
  return 0;
}
