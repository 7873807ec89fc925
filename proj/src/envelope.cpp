#include "gpi/envelope.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpi {

EnvelopeContext::EnvelopeContext(GradedAlgebra body) : body_(std::move(body)) {
  trivial_odd_ = !body_.has_odd_part();
  const int d = body_.dim;
  for (int t = 0; t < 2; ++t) {
    RatMat rows;
    for (int j = 0; j < d; ++j) {
      const int q = body_.degree[j].parity;
      const Rat sign = (t * q) % 2 ? Rat(-1) : Rat(1);
      // v e_j - sign * e_j v = 0, one row per target coordinate.
      for (int k = 0; k < d; ++k) {
        RatVec row = zero_vec(d);
        bool nonzero = false;
        for (int i = 0; i < d; ++i) {
          Rat val(0);
          for (const auto& [kk, c] : body_.mult[i][j])
            if (kk == k) val += c;
          for (const auto& [kk, c] : body_.mult[j][i])
            if (kk == k) val -= sign * c;
          if (!is_zero(val)) {
            row[i] = val;
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    rref(rows);
    constraints_[t] = std::move(rows);
  }
}

std::vector<int> EnvelopeContext::candidates(const GroupElement& g) const {
  return body_.basis_of_gdegree(g);
}

bool EnvelopeContext::value_is_central(int tag_parity, const RatVec& v) const {
  for (const auto& row : constraints_[tag_parity & 1]) {
    Rat acc(0);
    for (int i = 0; i < body_.dim; ++i)
      if (!is_zero(row[i]) && !is_zero(v[i])) acc += row[i] * v[i];
    if (!is_zero(acc)) return false;
  }
  return true;
}

TaggedValue envelope_eval_monomial(const EnvelopeContext& ctx, const std::vector<int>& word,
                                   const std::vector<int>& assignment) {
  const GradedAlgebra& b = ctx.body();
  const int n = static_cast<int>(word.size());
  // Sign of the odd subsequence: inversions among the odd positions in the
  // order they appear in the word.
  std::vector<int> odd_seq;
  for (int k = 0; k < n; ++k) {
    const int pos = word[k];
    if (b.degree[assignment[pos]].parity) odd_seq.push_back(pos);
  }
  long inv = 0;
  for (size_t i = 0; i < odd_seq.size(); ++i)
    for (size_t j = i + 1; j < odd_seq.size(); ++j)
      if (odd_seq[j] < odd_seq[i]) ++inv;
  RatVec val = zero_vec(b.dim);
  val[assignment[word[0]]] = (inv % 2) ? Rat(-1) : Rat(1);
  for (int k = 1; k < n; ++k) {
    RatVec next = zero_vec(b.dim);
    const int j = assignment[word[k]];
    for (int i = 0; i < b.dim; ++i) {
      if (is_zero(val[i])) continue;
      for (const auto& [kk, c] : b.mult[i][j]) next[kk] += val[i] * c;
    }
    val = std::move(next);
    if (is_zero_vec(val)) break;
  }
  std::sort(odd_seq.begin(), odd_seq.end());
  return TaggedValue{std::move(odd_seq), std::move(val)};
}

TaggedValue envelope_eval_poly(const EnvelopeContext& ctx, const MultilinearPoly& f,
                               const std::vector<int>& assignment) {
  const GradedAlgebra& b = ctx.body();
  const int n = f.n();
  if (static_cast<int>(assignment.size()) != n)
    throw std::invalid_argument("envelope_eval_poly: assignment length mismatch");
  std::vector<int> tag;
  for (int pos = 0; pos < n; ++pos) {
    const int j = assignment[pos];
    if (!(b.degree[j].g == f.tuple[pos]))
      throw std::invalid_argument("envelope_eval_poly: assignment degree mismatch at position " +
                                  std::to_string(pos));
    if (b.degree[j].parity) tag.push_back(pos);
  }
  RatVec acc = zero_vec(b.dim);
  for (const auto& [w, c] : f.terms) {
    TaggedValue tv = envelope_eval_monomial(ctx, w, assignment);
    for (int i = 0; i < b.dim; ++i) acc[i] += c * tv.element[i];
  }
  return TaggedValue{std::move(tag), std::move(acc)};
}

SuperElem oracle_generic_element(const EnvelopeContext& ctx, int position,
                                 const GroupElement& g) {
  SuperElem e;
  for (int j : ctx.candidates(g)) {
    SuperKey key;
    if (ctx.body().degree[j].parity)
      key.v = {{position, j}};
    else
      key.u = {{position, j}};
    key.body = j;
    e[key] = 1;
  }
  return e;
}

namespace {

// Merges two sorted Grassmann words; returns false when a variable repeats.
bool merge_odd(const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b,
               std::vector<std::pair<int, int>>& out, long& inversions) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      inversions += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) {
    out.push_back(b[j++]);
  }
  // duplicates across the splice point
  for (size_t k = 1; k < out.size(); ++k)
    if (out[k] == out[k - 1]) return false;
  return true;
}

std::vector<std::pair<int, int>> merge_even(const std::vector<std::pair<int, int>>& a,
                                            const std::vector<std::pair<int, int>>& b) {
  std::vector<std::pair<int, int>> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SuperElem oracle_mul(const EnvelopeContext& ctx, const SuperElem& x, const SuperElem& y) {
  const GradedAlgebra& b = ctx.body();
  SuperElem out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      long inv = 0;
      std::vector<std::pair<int, int>> v;
      if (!merge_odd(kx.v, ky.v, v, inv)) continue;
      auto u = merge_even(kx.u, ky.u);
      Rat coeff = cx * cy;
      if (inv % 2) coeff = -coeff;
      for (const auto& [k, c] : b.mult[kx.body][ky.body]) {
        SuperKey key{u, v, k};
        auto [it, fresh] = out.try_emplace(std::move(key), Rat(0));
        it->second += coeff * c;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

SuperElem oracle_add(SuperElem x, const SuperElem& y, const Rat& scale) {
  for (const auto& [k, c] : y) {
    auto [it, fresh] = x.try_emplace(k, Rat(0));
    it->second += scale * c;
    if (is_zero(it->second)) x.erase(it);
  }
  return x;
}

SuperElem oracle_eval(const EnvelopeContext& ctx, const MultilinearPoly& f, int budget) {
  const int n = f.n();
  if (n > budget)
    throw std::invalid_argument("oracle budget exceeded: n = " + std::to_string(n) +
                                " > " + std::to_string(budget));
  std::vector<SuperElem> generics;
  for (int pos = 0; pos < n; ++pos)
    generics.push_back(oracle_generic_element(ctx, pos, f.tuple[pos]));
  SuperElem total;
  for (const auto& [w, c] : f.terms) {
    SuperElem prod = generics[w[0]];
    for (size_t k = 1; k < w.size() && !prod.empty(); ++k)
      prod = oracle_mul(ctx, prod, generics[w[k]]);
    total = oracle_add(std::move(total), prod, c);
  }
  return total;
}

RatVec oracle_coefficient(const EnvelopeContext& ctx, const SuperElem& e,
                          const std::vector<int>& assignment) {
  const GradedAlgebra& b = ctx.body();
  SuperKey probe;
  for (int pos = 0; pos < static_cast<int>(assignment.size()); ++pos) {
    if (b.degree[assignment[pos]].parity)
      probe.v.emplace_back(pos, assignment[pos]);
    else
      probe.u.emplace_back(pos, assignment[pos]);
  }
  std::sort(probe.u.begin(), probe.u.end());
  std::sort(probe.v.begin(), probe.v.end());
  RatVec out = zero_vec(b.dim);
  for (int k = 0; k < b.dim; ++k) {
    probe.body = k;
    auto it = e.find(probe);
    if (it != e.end()) out[k] = it->second;
  }
  return out;
}

}  // namespace gpi
