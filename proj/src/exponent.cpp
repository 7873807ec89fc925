#include "gpi/exponent.hpp"

#include <algorithm>
#include <numeric>

namespace gpi {

namespace {

std::vector<Subspace> component_subspaces(const GradedAlgebra& b) {
  std::vector<Subspace> out;
  for (const auto& rows : b.wedderburn->components) out.push_back(span_of(b.dim, rows));
  return out;
}

// Component index of each basis element, -1 for radical elements.
std::vector<int> component_of_basis(const GradedAlgebra& b, const std::vector<Subspace>& comps) {
  std::vector<int> out(b.dim, -1);
  for (int j = 0; j < b.dim; ++j) {
    RatVec e = zero_vec(b.dim);
    e[j] = 1;
    for (size_t c = 0; c < comps.size(); ++c) {
      if (subspace_contains(comps[c], e)) {
        out[j] = static_cast<int>(c);
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::pair<int, AdmissibilityCertificate> admissible_max(const GradedAlgebra& b) {
  if (!b.wedderburn) throw std::invalid_argument("admissible_max: no Wedderburn data");
  ValidationReport rep = verify_wedderburn(b);
  if (!rep.ok) throw std::invalid_argument("admissible_max: Wedderburn data invalid: " + rep.message);
  auto comps = component_subspaces(b);
  Subspace rad = span_of(b.dim, b.wedderburn->radical);
  const int q = static_cast<int>(comps.size());

  // Candidate subsets ordered by total dimension (descending), then mask.
  std::vector<std::pair<int, int>> subsets;  // (total_dim, mask)
  for (int mask = 1; mask < (1 << q); ++mask) {
    int total = 0;
    for (int c = 0; c < q; ++c)
      if (mask & (1 << c)) total += comps[c].dim();
    subsets.emplace_back(total, mask);
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b2) {
    if (a.first != b2.first) return a.first > b2.first;
    return a.second < b2.second;
  });

  int best = 0;
  AdmissibilityCertificate cert;
  for (const auto& [total, mask] : subsets) {
    if (total <= best) break;  // sorted: nothing better remains
    std::vector<int> seq;
    for (int c = 0; c < q; ++c)
      if (mask & (1 << c)) seq.push_back(c);
    std::sort(seq.begin(), seq.end());
    do {
      Subspace chain = comps[seq[0]];
      for (size_t k = 1; k < seq.size() && chain.dim() > 0; ++k) {
        chain = subspace_mul(b, chain, rad);
        chain = subspace_mul(b, chain, comps[seq[k]]);
      }
      if (chain.dim() > 0) {
        best = total;
        cert = AdmissibilityCertificate{seq, chain.basis[0], total};
        break;
      }
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
  return {best, cert};
}

namespace {

// Product of left-normed pair commutators [x0,x1][x2,x3]...; n = 1 gives the
// bare variable.
MultilinearPoly template_poly(const DegreeTuple& tuple) {
  const int n = static_cast<int>(tuple.size());
  MultilinearPoly p;
  p.tuple = tuple;
  if (n == 1) {
    p.terms.emplace_back(std::vector<int>{0}, Rat(1));
    return p;
  }
  const int blocks = n / 2;
  for (int mask = 0; mask < (1 << blocks); ++mask) {
    std::vector<int> word;
    int swaps = 0;
    for (int k = 0; k < blocks; ++k) {
      if (mask & (1 << k)) {
        word.push_back(2 * k + 1);
        word.push_back(2 * k);
        ++swaps;
      } else {
        word.push_back(2 * k);
        word.push_back(2 * k + 1);
      }
    }
    p.terms.emplace_back(std::move(word), swaps % 2 ? Rat(-1) : Rat(1));
  }
  p.canonicalize();
  return p;
}

struct Searcher {
  const GradedAlgebra& b;
  EnvelopeContext ctx;
  std::vector<Subspace> comps;
  std::vector<int> comp_of;
  std::vector<int> comp_dim;
  int max_total = 0;
  const BudgetGuard& guard;
  long exhaustive_limit = 1'500'000;
  long search_cap = 2'000'000;

  explicit Searcher(const GradedAlgebra& alg, const BudgetGuard& g)
      : b(alg), ctx(alg), guard(g) {
    comps = component_subspaces(alg);
    comp_of = component_of_basis(alg, comps);
    for (const auto& c : comps) {
      comp_dim.push_back(c.dim());
      max_total += c.dim();
    }
  }

  int touched_dim(const std::vector<int>& touched) const {
    int d = 0;
    for (int c : touched) d += comp_dim[c];
    return d;
  }

  std::vector<int> touched_of(const std::vector<int>& asg) const {
    std::vector<int> t;
    for (int j : asg)
      if (comp_of[j] >= 0) t.push_back(comp_of[j]);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
  }

  // Sound per-tuple centrality certificate for the pair-commutator shape:
  // every evaluation value lies in a product of block spans, checked against
  // the twisted centralizer for each parity pattern.
  bool span_certificate(const DegreeTuple& tuple) const {
    const int n = static_cast<int>(tuple.size());
    if (n == 1) {
      for (int j : ctx.candidates(tuple[0])) {
        RatVec e = zero_vec(b.dim);
        e[j] = 1;
        if (!ctx.value_is_central(b.degree[j].parity, e)) return false;
      }
      return true;
    }
    std::vector<std::vector<int>> even_c(n), odd_c(n);
    for (int i = 0; i < n; ++i)
      for (int j : ctx.candidates(tuple[i]))
        (b.degree[j].parity ? odd_c[i] : even_c[i]).push_back(j);
    for (int pmask = 0; pmask < (1 << n); ++pmask) {
      bool feasible = true;
      int t = 0;
      for (int i = 0; i < n && feasible; ++i) {
        const bool odd = pmask & (1 << i);
        if ((odd ? odd_c[i] : even_c[i]).empty()) feasible = false;
        if (odd) ++t;
      }
      if (!feasible) continue;
      t &= 1;
      Subspace w;
      for (int k = 0; k < n / 2; ++k) {
        const int i1 = 2 * k, i2 = 2 * k + 1;
        const bool o1 = pmask & (1 << i1), o2 = pmask & (1 << i2);
        const Rat sign = (o1 && o2) ? Rat(1) : Rat(-1);  // bb' - (-1)^(p p') b'b
        SpanBuilder sb(b.dim);
        for (int x : (o1 ? odd_c[i1] : even_c[i1])) {
          for (int y : (o2 ? odd_c[i2] : even_c[i2])) {
            RatVec ex = zero_vec(b.dim), ey = zero_vec(b.dim);
            ex[x] = 1;
            ey[y] = 1;
            RatVec v = b.mul(ex, ey);
            RatVec w2 = b.mul(ey, ex);
            for (int c = 0; c < b.dim; ++c) v[c] += sign * w2[c];
            sb.add(std::move(v));
          }
        }
        Subspace block = sb.take();
        w = (k == 0) ? block : subspace_mul(b, w, block);
        if (w.dim() == 0) break;
      }
      for (const auto& row : w.basis)
        if (!ctx.value_is_central(t, row)) return false;
    }
    return true;
  }

  struct ScanResult {
    bool central = true;
    long evals = 0;
    std::optional<CentralWitness> best;
  };

  // Evaluates f over assignments of the tuple. verify=true demands every
  // value be central (exhaustive verification); otherwise stops scanning at
  // the cap. Tracks the nonzero value with the largest touched dimension
  // (restricted to supersets of `required` when given).
  ScanResult scan_assignments(const MultilinearPoly& f, bool verify, long cap,
                              const std::vector<int>& required) const {
    ScanResult res;
    const int n = f.n();
    std::vector<std::vector<int>> cand(n);
    for (int i = 0; i < n; ++i) {
      cand[i] = ctx.candidates(f.tuple[i]);
      if (cand[i].empty()) return res;  // nothing to evaluate
    }
    std::vector<int> idx(n, 0);
    while (true) {
      if (res.evals % 4096 == 0) guard.check("central witness scan");
      if (!verify && res.evals >= cap) break;
      std::vector<int> asg(n);
      int t = 0;
      for (int i = 0; i < n; ++i) {
        asg[i] = cand[i][idx[i]];
        t += b.degree[asg[i]].parity;
      }
      ++res.evals;
      TaggedValue val = envelope_eval_poly(ctx, f, asg);
      if (!is_zero_vec(val.element)) {
        if (!ctx.value_is_central(t & 1, val.element)) {
          res.central = false;
          return res;
        }
        std::vector<int> touched = touched_of(asg);
        bool covers = std::includes(touched.begin(), touched.end(), required.begin(),
                                    required.end());
        int d = touched_dim(touched);
        if (covers && (!res.best || d > res.best->total_dim)) {
          res.best = CentralWitness{n,   f.tuple, f,        asg, val.element,
                                    touched, d,   "", 0};
        }
      }
      int p = n - 1;
      while (p >= 0 && ++idx[p] == static_cast<int>(cand[p].size())) idx[p--] = 0;
      if (p < 0) break;
    }
    return res;
  }

  long assignment_count(const DegreeTuple& tuple) const {
    long total = 1;
    for (const auto& d : tuple) {
      total *= static_cast<long>(ctx.candidates(d).size());
      if (total > (1L << 62) / 4) return total;
    }
    return total;
  }

  std::optional<CentralWitness> run_template(int n_max, const std::vector<int>& required,
                                             int stop_dim) const {
    std::optional<CentralWitness> best;
    auto support = b.gdegree_support();
    const long s = static_cast<long>(support.size());
    std::vector<int> degrees{1};
    for (int n = 2; n <= n_max; n += 2) degrees.push_back(n);
    for (int n : degrees) {
      long ntuples = 1;
      for (int i = 0; i < n; ++i) ntuples *= s;
      for (long ti = 0; ti < ntuples; ++ti) {
        guard.check("template tuple loop");
        DegreeTuple tuple(n);
        long x = ti;
        for (int i = n - 1; i >= 0; --i) {
          tuple[i] = support[x % s];
          x /= s;
        }
        if (!span_certificate(tuple)) continue;
        MultilinearPoly f = template_poly(tuple);
        const long cnt = assignment_count(tuple);
        const bool verify = cnt <= exhaustive_limit;
        ScanResult res = scan_assignments(f, verify, search_cap, required);
        if (!res.central) continue;  // span certificate was coarse; skip honestly
        if (res.best) {
          res.best->verify_method = verify ? "exhaustive" : "span";
          res.best->centrality_evals = res.evals;
          if (!best || res.best->total_dim > best->total_dim) best = res.best;
          if (best->total_dim >= stop_dim) return best;
        }
      }
    }
    return best;
  }

  std::optional<CentralWitness> run_full(int n_max, const std::vector<int>& required,
                                         int stop_dim) const {
    std::optional<CentralWitness> best;
    auto support = b.gdegree_support();
    const long s = static_cast<long>(support.size());
    for (int n = 1; n <= std::min(n_max, 4); ++n) {
      long ntuples = 1;
      for (int i = 0; i < n; ++i) ntuples *= s;
      for (long ti = 0; ti < ntuples; ++ti) {
        guard.check("full-mode tuple loop");
        DegreeTuple tuple(n);
        long x = ti;
        for (int i = n - 1; i >= 0; --i) {
          tuple[i] = support[x % s];
          x /= s;
        }
        PolySubspace v = central_kernel(ctx, tuple);
        if (v.dim() == 0) continue;
        for (const auto& row : v.basis) {
          MultilinearPoly f = vec_to_mpoly(tuple, row);
          ScanResult res = scan_assignments(f, true, search_cap, required);
          if (!res.central)
            throw std::logic_error("central kernel produced a non-central polynomial");
          if (res.best) {
            res.best->verify_method = "exhaustive";
            res.best->centrality_evals = res.evals;
            if (!best || res.best->total_dim > best->total_dim) best = res.best;
            if (best->total_dim >= stop_dim) return best;
          }
        }
      }
    }
    return best;
  }
};

}  // namespace

std::optional<CentralWitness> central_witness_search(const GradedAlgebra& b,
                                                     const std::vector<int>& targets, int n_max,
                                                     WitnessMode mode, const BudgetGuard& guard) {
  if (!b.wedderburn) throw std::invalid_argument("central_witness_search: no Wedderburn data");
  Searcher s(b, guard);
  std::vector<int> req = targets;
  std::sort(req.begin(), req.end());
  return mode == WitnessMode::Template ? s.run_template(n_max, req, s.max_total)
                                       : s.run_full(n_max, req, s.max_total);
}

std::optional<CentralWitness> central_witness_best(const GradedAlgebra& b, int n_max,
                                                   WitnessMode mode, int stop_at_dim,
                                                   const BudgetGuard& guard) {
  if (!b.wedderburn) throw std::invalid_argument("central_witness_best: no Wedderburn data");
  Searcher s(b, guard);
  const int stop = stop_at_dim > 0 ? stop_at_dim : s.max_total;
  return mode == WitnessMode::Template ? s.run_template(n_max, {}, stop)
                                       : s.run_full(n_max, {}, stop);
}

ExponentReport exponent_report(const GradedAlgebra& b, int n_max, WitnessMode mode,
                               std::optional<int> declared_delta, const BudgetGuard& guard) {
  ExponentReport rep;
  auto [exp_g, cert] = admissible_max(b);
  rep.exp_g = exp_g;
  rep.admissible = cert;
  rep.searched_max_degree = n_max;
  rep.mode = mode == WitnessMode::Template ? "template" : "full";
  // The search is capped by the total semisimple dimension, which bounds any
  // touched-component sum by definition.
  auto witness = central_witness_best(b, n_max, mode, 0, guard);
  if (witness) {
    rep.delta_lower_bound = witness->total_dim;
    rep.delta_witness = std::move(witness);
  }
  rep.delta_le_exp = rep.delta_lower_bound <= rep.exp_g;
  if (rep.delta_lower_bound == rep.exp_g)
    rep.delta_exact = rep.delta_lower_bound;
  else if (declared_delta && rep.delta_lower_bound == *declared_delta)
    rep.delta_exact = rep.delta_lower_bound;
  return rep;
}

}  // namespace gpi
