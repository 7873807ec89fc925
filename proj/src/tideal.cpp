#include <algorithm>
#include <stdexcept>

#include "gpi/poly.hpp"

namespace gpi {

namespace {

GroupElement subset_degree(const GroupSpec& g, const DegreeTuple& tuple,
                           const std::vector<int>& positions) {
  GroupElement d = g.identity();
  for (int p : positions) d = g.mul(d, tuple[p]);
  return d;
}

}  // namespace

PolySubspace t_consequences(const GroupSpec& group, const std::vector<GradedPoly>& gens,
                            const DegreeTuple& tuple) {
  const int n = static_cast<int>(tuple.size());
  const int amb = static_cast<int>(factorial(n));
  SpanBuilder sb(amb);

  std::vector<MultilinearPoly> mlgens;
  for (const auto& g : gens) {
    auto parts = multilinearize(g);
    mlgens.insert(mlgens.end(), parts.begin(), parts.end());
  }

  for (const auto& f : mlgens) {
    const int k = f.n();
    if (k > n) continue;
    // blocks[j]: the word substituted for the j-th variable of f.
    std::vector<std::vector<int>> blocks(k);
    std::vector<bool> used(n, false);

    std::function<void()> emit_instances = [&]() {
      std::vector<int> rest;
      for (int p = 0; p < n; ++p)
        if (!used[p]) rest.push_back(p);
      std::sort(rest.begin(), rest.end());
      std::vector<int> arr = rest;
      do {
        for (size_t cut = 0; cut <= arr.size(); ++cut) {
          RatVec vec = zero_vec(amb);
          for (const auto& [fw, c] : f.terms) {
            std::vector<int> word(arr.begin(), arr.begin() + cut);
            for (int fvar : fw) word.insert(word.end(), blocks[fvar].begin(), blocks[fvar].end());
            word.insert(word.end(), arr.begin() + cut, arr.end());
            vec[perm_rank(word)] += c;
          }
          sb.add(std::move(vec));
          if (sb.full()) return;
        }
      } while (std::next_permutation(arr.begin(), arr.end()));
    };

    std::function<void(int)> choose_block = [&](int j) {
      if (sb.full()) return;
      if (j == k) {
        emit_instances();
        return;
      }
      // Enumerate nonempty ordered words over unused positions whose degree
      // product matches the generator variable degree.
      std::vector<int> avail;
      for (int p = 0; p < n; ++p)
        if (!used[p]) avail.push_back(p);
      const int m = static_cast<int>(avail.size());
      // Subset via bitmask, then each ordering.
      for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> sub;
        for (int b = 0; b < m; ++b)
          if (mask & (1 << b)) sub.push_back(avail[b]);
        if (!(subset_degree(group, tuple, sub) == f.tuple[j])) continue;
        std::sort(sub.begin(), sub.end());
        do {
          blocks[j] = sub;
          for (int p : sub) used[p] = true;
          choose_block(j + 1);
          for (int p : sub) used[p] = false;
          if (sb.full()) return;
        } while (std::next_permutation(sub.begin(), sub.end()));
      }
    };
    choose_block(0);
    if (sb.full()) break;
  }
  return PolySubspace{tuple, sb.take().basis};
}

PolySubspace product_span(const SubspaceProvider& left, const SubspaceProvider& right,
                          const DegreeTuple& tuple) {
  const int n = static_cast<int>(tuple.size());
  const int amb = static_cast<int>(factorial(n));
  SpanBuilder sb(amb);
  for (int mask = 1; mask + 1 < (1 << n); ++mask) {
    std::vector<int> s, t;
    for (int b = 0; b < n; ++b)
      (mask & (1 << b) ? s : t).push_back(b);
    DegreeTuple ts, tt;
    for (int p : s) ts.push_back(tuple[p]);
    for (int p : t) tt.push_back(tuple[p]);
    PolySubspace ps = left(ts);
    if (ps.dim() == 0) continue;
    PolySubspace qt = right(tt);
    if (qt.dim() == 0) continue;
    const int ns = static_cast<int>(s.size());
    const int nt = static_cast<int>(t.size());
    for (const auto& prow : ps.basis) {
      for (const auto& qrow : qt.basis) {
        RatVec vec = zero_vec(amb);
        for (size_t rp = 0; rp < prow.size(); ++rp) {
          if (is_zero(prow[rp])) continue;
          std::vector<int> wp = perm_unrank(ns, static_cast<long>(rp));
          for (size_t rq = 0; rq < qrow.size(); ++rq) {
            if (is_zero(qrow[rq])) continue;
            std::vector<int> wq = perm_unrank(nt, static_cast<long>(rq));
            std::vector<int> word;
            word.reserve(n);
            for (int x : wp) word.push_back(s[x]);
            for (int x : wq) word.push_back(t[x]);
            vec[perm_rank(word)] += prow[rp] * qrow[rq];
          }
        }
        sb.add(std::move(vec));
        if (sb.full()) return PolySubspace{tuple, sb.take().basis};
      }
    }
  }
  return PolySubspace{tuple, sb.take().basis};
}

}  // namespace gpi
