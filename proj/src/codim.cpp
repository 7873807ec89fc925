#include "gpi/codim.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace gpi {

BudgetGuard BudgetGuard::from_env() {
  BudgetGuard g;
  if (const char* ms = std::getenv("GPI_BUDGET_MS")) {
    long v = std::atol(ms);
    if (v > 0) g.deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(v);
  }
  return g;
}

void BudgetGuard::check(const std::string& where) const {
  if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
    throw BudgetError("wall-clock budget exhausted during " + where);
}

namespace {

// One substitutable element: pure parity, homogeneous, dense body vector.
struct Cand {
  int parity;
  RatVec vec;
};

std::vector<std::vector<Cand>> candidate_lists(const EnvelopeContext& ctx,
                                               const DegreeTuple& tuple,
                                               const std::vector<ExtraSubstitution>& extra) {
  const GradedAlgebra& b = ctx.body();
  std::vector<std::vector<Cand>> lists(tuple.size());
  for (size_t pos = 0; pos < tuple.size(); ++pos) {
    for (int j : ctx.candidates(tuple[pos])) {
      RatVec v = zero_vec(b.dim);
      v[j] = 1;
      lists[pos].push_back(Cand{b.degree[j].parity, std::move(v)});
    }
    for (const auto& ex : extra)
      if (ex.gdeg == tuple[pos]) lists[pos].push_back(Cand{ex.parity, ex.element});
  }
  return lists;
}

// Walks all monomials sharing prefix products; sink(rank, sign, value).
template <typename Sink>
void for_each_monomial_value(const GradedAlgebra& b, const std::vector<const Cand*>& asg,
                             Sink&& sink) {
  const int n = static_cast<int>(asg.size());
  std::vector<int> word;
  word.reserve(n);
  std::vector<bool> used(n, false);
  // inversions among odd positions in appearance order
  std::function<void(const RatVec&, long)> dfs = [&](const RatVec& prefix, long inv) {
    if (static_cast<int>(word.size()) == n) {
      sink(perm_rank(word), inv % 2 ? Rat(-1) : Rat(1), prefix);
      return;
    }
    for (int q = 0; q < n; ++q) {
      if (used[q]) continue;
      long add = 0;
      if (asg[q]->parity) {
        for (int p : word)
          if (asg[p]->parity && p > q) ++add;
      }
      RatVec next;
      if (word.empty()) {
        next = asg[q]->vec;
      } else {
        next = b.mul(prefix, asg[q]->vec);
      }
      used[q] = true;
      word.push_back(q);
      if (!is_zero_vec(next)) {
        dfs(next, inv + add);
      } else {
        // All completions evaluate to zero; still report them so kernels see
        // complete columns (zero contribution: skip entirely).
      }
      word.pop_back();
      used[q] = false;
    }
  };
  dfs(zero_vec(b.dim), 0);
}

// Builds constraint rows over the n!-dim monomial space. kind 0: identity
// (one row per body coordinate), kind 1: centrality (rows via the twisted
// centralizer constraints).
RatMat kernel_rows(const EnvelopeContext& ctx, const DegreeTuple& tuple,
                   const std::vector<ExtraSubstitution>& extra, int kind,
                   const BudgetGuard& guard) {
  const GradedAlgebra& b = ctx.body();
  const int n = static_cast<int>(tuple.size());
  const long nf = factorial(n);
  auto lists = candidate_lists(ctx, tuple, extra);
  for (const auto& l : lists)
    if (l.empty()) return {};  // empty component: every polynomial vanishes
  RatMat rows;
  std::vector<int> idx(n, 0);
  while (true) {
    guard.check("kernel matrix assembly");
    std::vector<const Cand*> asg(n);
    int t = 0;
    for (int i = 0; i < n; ++i) {
      asg[i] = &lists[i][idx[i]];
      t += asg[i]->parity;
    }
    t &= 1;
    // values[k][rank]
    RatMat block(b.dim, zero_vec(static_cast<int>(nf)));
    bool any = false;
    for_each_monomial_value(b, asg, [&](long rank, const Rat& sign, const RatVec& val) {
      for (int k = 0; k < b.dim; ++k) {
        if (is_zero(val[k])) continue;
        block[k][rank] = sign * val[k];
        any = true;
      }
    });
    if (any) {
      if (kind == 0) {
        for (int k = 0; k < b.dim; ++k)
          if (!is_zero_vec(block[k])) rows.push_back(std::move(block[k]));
      } else {
        for (const auto& crow : ctx.central_constraints(t)) {
          RatVec row = zero_vec(static_cast<int>(nf));
          bool nz = false;
          for (int k = 0; k < b.dim; ++k) {
            if (is_zero(crow[k])) continue;
            for (long r = 0; r < nf; ++r) {
              if (is_zero(block[k][r])) continue;
              row[r] += crow[k] * block[k][r];
              nz = true;
            }
          }
          if (nz) rows.push_back(std::move(row));
        }
      }
    }
    int p = n - 1;
    while (p >= 0 && ++idx[p] == static_cast<int>(lists[p].size())) idx[p--] = 0;
    if (p < 0) break;
  }
  return rows;
}

}  // namespace

PolySubspace identity_kernel(const EnvelopeContext& ctx, const DegreeTuple& tuple,
                             const std::vector<ExtraSubstitution>& extra) {
  const int n = static_cast<int>(tuple.size());
  RatMat rows = kernel_rows(ctx, tuple, extra, 0, {});
  return PolySubspace{tuple, nullspace(rows, static_cast<int>(factorial(n)))};
}

PolySubspace central_kernel(const EnvelopeContext& ctx, const DegreeTuple& tuple,
                            const std::vector<ExtraSubstitution>& extra) {
  const int n = static_cast<int>(tuple.size());
  RatMat rows = kernel_rows(ctx, tuple, extra, 1, {});
  return PolySubspace{tuple, nullspace(rows, static_cast<int>(factorial(n)))};
}

CodimReport codim_for_n(const EnvelopeContext& ctx, int n, int jobs, const BudgetGuard& guard) {
  const GradedAlgebra& b = ctx.body();
  auto support = b.gdegree_support();
  const long s = static_cast<long>(support.size());
  long total = 1, group_total = 1;
  for (int i = 0; i < n; ++i) {
    total *= s;
    group_total *= b.group.order();
  }
  CodimReport rep;
  rep.n = n;
  rep.pruned_tuples = group_total - total;
  rep.tuples.resize(total);

  auto run_range = [&](long lo, long hi) {
    for (long t = lo; t < hi; ++t) {
      guard.check("codimension tuple loop");
      DegreeTuple tuple(n);
      long x = t;
      for (int i = n - 1; i >= 0; --i) {
        tuple[i] = support[x % s];
        x /= s;
      }
      RatMat id_rows = kernel_rows(ctx, tuple, {}, 0, guard);
      RatMat z_rows = kernel_rows(ctx, tuple, {}, 1, guard);
      long c = rank_of(std::move(id_rows));
      long cz = rank_of(std::move(z_rows));
      rep.tuples[t] = TupleCount{std::move(tuple), c, cz, c - cz};
    }
  };
  if (jobs <= 1 || total < 2) {
    run_range(0, total);
  } else {
    const int w = std::min<long>(jobs, total);
    std::vector<std::thread> threads;
    long chunk = (total + w - 1) / w;
    for (int i = 0; i < w; ++i)
      threads.emplace_back(run_range, i * chunk, std::min<long>(total, (i + 1) * chunk));
    for (auto& th : threads) th.join();
  }
  for (const auto& t : rep.tuples) {
    rep.c += t.c;
    rep.cz += t.cz;
    rep.cdelta += t.cdelta;
  }
  return rep;
}

std::vector<CodimReport> codim_sequence(const EnvelopeContext& ctx, int n_max, int jobs,
                                        const BudgetGuard& guard) {
  if (n_max < 1) throw BudgetError("codimension degree must be at least 1");
  const int hard_cap = 6;
  if (n_max > hard_cap)
    throw BudgetError("refusing codimension computation beyond n = " + std::to_string(hard_cap) +
                      " (requested " + std::to_string(n_max) + ")");
  // Estimate the matrix volume up front; refuse rather than truncate.
  const GradedAlgebra& b = ctx.body();
  double cells = 0;
  long max_cand = 0;
  for (const auto& g : b.gdegree_support())
    max_cand = std::max<long>(max_cand, static_cast<long>(ctx.candidates(g).size()));
  for (int n = 1; n <= n_max; ++n) {
    double tuples = 1, asg = 1;
    for (int i = 0; i < n; ++i) {
      tuples *= static_cast<double>(b.gdegree_support().size());
      asg *= static_cast<double>(max_cand);
    }
    cells += tuples * asg * static_cast<double>(b.dim) * static_cast<double>(factorial(n));
  }
  if (cells > 4e8)
    throw BudgetError("refusing codimension computation: estimated matrix volume too large");
  std::vector<CodimReport> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(codim_for_n(ctx, n, jobs, guard));
  return out;
}

bool is_identity(const EnvelopeContext& ctx, const GradedPoly& f) {
  return classify_poly(ctx, f) == CentralClass::Identity;
}

CentralClass classify_poly(const EnvelopeContext& ctx, const GradedPoly& f) {
  const GradedAlgebra& b = ctx.body();
  bool any_nonzero = false;
  for (const auto& ml : multilinearize(f)) {
    const int n = ml.n();
    std::vector<std::vector<int>> cand(n);
    bool empty = false;
    for (int i = 0; i < n; ++i) {
      cand[i] = ctx.candidates(ml.tuple[i]);
      if (cand[i].empty()) empty = true;
    }
    if (empty) continue;  // every evaluation vanishes
    std::vector<int> idx(n, 0);
    while (true) {
      std::vector<int> asg(n);
      int t = 0;
      for (int i = 0; i < n; ++i) {
        asg[i] = cand[i][idx[i]];
        t += b.degree[asg[i]].parity;
      }
      TaggedValue val = envelope_eval_poly(ctx, ml, asg);
      if (!is_zero_vec(val.element)) {
        any_nonzero = true;
        if (!ctx.value_is_central(t & 1, val.element)) return CentralClass::NotCentral;
      }
      int p = n - 1;
      while (p >= 0 && ++idx[p] == static_cast<int>(cand[p].size())) idx[p--] = 0;
      if (p < 0) break;
    }
  }
  return any_nonzero ? CentralClass::ProperCentral : CentralClass::Identity;
}

const char* central_class_name(CentralClass c) {
  switch (c) {
    case CentralClass::Identity:
      return "identity";
    case CentralClass::ProperCentral:
      return "proper-central";
    case CentralClass::NotCentral:
      return "not-central";
  }
  return "?";
}

}  // namespace gpi
