#include "gpi/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpi {

void GradedPoly::canonicalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Word, Rat>> merged;
  for (auto& [w, c] : terms) {
    if (!merged.empty() && merged.back().first == w)
      merged.back().second += c;
    else
      merged.emplace_back(std::move(w), std::move(c));
  }
  std::erase_if(merged, [](const auto& t) { return gpi::is_zero(t.second); });
  terms = std::move(merged);
}

GradedPoly poly_zero(const GroupSpec& g) { return GradedPoly{g, {}}; }

GradedPoly poly_var(const GroupSpec& g, int index, const GroupElement& deg) {
  g.check_element(deg);
  return GradedPoly{g, {{Word{Var{index, deg}}, Rat(1)}}};
}

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  r.canonicalize();
  return r;
}

GradedPoly poly_scale(const GradedPoly& a, const Rat& c) {
  GradedPoly r = a;
  for (auto& [w, x] : r.terms) x *= c;
  r.canonicalize();
  return r;
}

GradedPoly poly_sub(const GradedPoly& a, const GradedPoly& b) {
  return poly_add(a, poly_scale(b, Rat(-1)));
}

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly r = poly_zero(a.group);
  for (const auto& [wa, ca] : a.terms) {
    for (const auto& [wb, cb] : b.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.terms.emplace_back(std::move(w), ca * cb);
    }
  }
  r.canonicalize();
  return r;
}

GradedPoly poly_commutator(const GradedPoly& a, const GradedPoly& b) {
  return poly_sub(poly_mul(a, b), poly_mul(b, a));
}

GradedPoly poly_anticommutator(const GradedPoly& a, const GradedPoly& b) {
  return poly_add(poly_mul(a, b), poly_mul(b, a));
}

std::string tuple_str(const GroupSpec& g, const DegreeTuple& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += g.label(t[i]);
  }
  return s + ")";
}

void MultilinearPoly::canonicalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::vector<int>, Rat>> merged;
  for (auto& [w, c] : terms) {
    if (!merged.empty() && merged.back().first == w)
      merged.back().second += c;
    else
      merged.emplace_back(std::move(w), std::move(c));
  }
  std::erase_if(merged, [](const auto& t) { return is_zero(t.second); });
  terms = std::move(merged);
}

GroupElement LabelMap::resolve(const std::string& s) const {
  auto it = labels.find(s);
  if (it != labels.end()) return it->second;
  return group.parse_label(s);
}

std::string LabelMap::label_of(const GroupElement& e) const {
  for (const auto& [name, el] : labels)
    if (el == e) return name;
  return group.label(e);
}

std::vector<MultilinearPoly> multilinearize(const GradedPoly& f) {
  // Split into multihomogeneous components keyed by variable multiplicities.
  using MultiDeg = std::map<Var, int>;
  std::map<MultiDeg, std::vector<std::pair<Word, Rat>>> comps;
  for (const auto& [w, c] : f.terms) {
    MultiDeg md;
    for (const auto& v : w) md[v]++;
    comps[md].emplace_back(w, c);
  }
  std::vector<MultilinearPoly> out;
  for (const auto& [md, terms] : comps) {
    // Position blocks per variable, in canonical variable order.
    std::vector<Var> vars;
    std::vector<int> first_pos;
    int n = 0;
    for (const auto& [v, m] : md) {
      vars.push_back(v);
      first_pos.push_back(n);
      n += m;
    }
    MultilinearPoly ml;
    ml.tuple.resize(n);
    for (size_t vi = 0; vi < vars.size(); ++vi) {
      int m = md.at(vars[vi]);
      for (int k = 0; k < m; ++k) ml.tuple[first_pos[vi] + k] = vars[vi].deg;
    }
    auto var_index = [&](const Var& v) {
      return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    };
    for (const auto& [w, c] : terms) {
      // Distribute the occurrences of each variable over its block of fresh
      // positions, in all distinct ways.
      std::vector<std::vector<int>> occ(vars.size());
      for (size_t k = 0; k < w.size(); ++k) occ[var_index(w[k])].push_back(static_cast<int>(k));
      // Iterate over tuples of bijections block -> occurrences.
      std::vector<std::vector<int>> perms(vars.size());
      for (size_t vi = 0; vi < vars.size(); ++vi) {
        perms[vi].resize(occ[vi].size());
        for (size_t k = 0; k < occ[vi].size(); ++k) perms[vi][k] = static_cast<int>(k);
      }
      std::function<void(size_t)> rec = [&](size_t vi) {
        if (vi == vars.size()) {
          std::vector<int> word(w.size());
          for (size_t v2 = 0; v2 < vars.size(); ++v2)
            for (size_t k = 0; k < occ[v2].size(); ++k)
              word[occ[v2][k]] = first_pos[v2] + perms[v2][k];
          ml.terms.emplace_back(std::move(word), c);
          return;
        }
        std::sort(perms[vi].begin(), perms[vi].end());
        do {
          rec(vi + 1);
        } while (std::next_permutation(perms[vi].begin(), perms[vi].end()));
      };
      rec(0);
    }
    ml.canonicalize();
    if (!ml.terms.empty()) out.push_back(std::move(ml));
  }
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long perm_rank(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (word[j] < word[i]) ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

std::vector<int> perm_unrank(int n, long rank) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::vector<int> word;
  for (int i = n - 1; i >= 0; --i) {
    long f = factorial(i);
    long k = rank / f;
    rank %= f;
    word.push_back(pool[k]);
    pool.erase(pool.begin() + k);
  }
  return word;
}

PolySubspace poly_subspace_zero(const DegreeTuple& t) { return PolySubspace{t, {}}; }

PolySubspace poly_subspace_full(const DegreeTuple& t) {
  const long d = factorial(static_cast<int>(t.size()));
  RatMat id;
  for (long i = 0; i < d; ++i) {
    RatVec v = zero_vec(static_cast<int>(d));
    v[i] = 1;
    id.push_back(std::move(v));
  }
  return PolySubspace{t, std::move(id)};
}

RatVec mpoly_to_vec(const MultilinearPoly& p) {
  RatVec v = zero_vec(static_cast<int>(factorial(p.n())));
  for (const auto& [w, c] : p.terms) v[perm_rank(w)] += c;
  return v;
}

MultilinearPoly vec_to_mpoly(const DegreeTuple& t, const RatVec& v) {
  MultilinearPoly p;
  p.tuple = t;
  const int n = static_cast<int>(t.size());
  for (size_t r = 0; r < v.size(); ++r)
    if (!is_zero(v[r])) p.terms.emplace_back(perm_unrank(n, static_cast<long>(r)), v[r]);
  return p;
}

PolySubspace poly_subspace_sum(const PolySubspace& a, const PolySubspace& b) {
  if (a.tuple != b.tuple) throw std::invalid_argument("poly subspace tuple mismatch");
  const int amb = static_cast<int>(factorial(static_cast<int>(a.tuple.size())));
  Subspace s = subspace_sum(Subspace{amb, a.basis}, Subspace{amb, b.basis});
  return PolySubspace{a.tuple, std::move(s.basis)};
}

PolySubspace poly_subspace_intersection(const PolySubspace& a, const PolySubspace& b) {
  if (a.tuple != b.tuple) throw std::invalid_argument("poly subspace tuple mismatch");
  const int amb = static_cast<int>(factorial(static_cast<int>(a.tuple.size())));
  Subspace s = subspace_intersection(Subspace{amb, a.basis}, Subspace{amb, b.basis});
  return PolySubspace{a.tuple, std::move(s.basis)};
}

bool poly_subspace_contains(const PolySubspace& s, const MultilinearPoly& p) {
  if (s.tuple != p.tuple) return false;
  const int amb = static_cast<int>(factorial(p.n()));
  return subspace_contains(Subspace{amb, s.basis}, mpoly_to_vec(p));
}

PolySubspace permute_positions(const PolySubspace& s, const std::vector<int>& perm) {
  const int n = static_cast<int>(s.tuple.size());
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute_positions: length mismatch");
  DegreeTuple nt(n);
  for (int i = 0; i < n; ++i) nt[perm[i]] = s.tuple[i];
  RatMat rows;
  for (const auto& row : s.basis) {
    RatVec v = zero_vec(static_cast<int>(row.size()));
    for (size_t r = 0; r < row.size(); ++r) {
      if (is_zero(row[r])) continue;
      std::vector<int> w = perm_unrank(n, static_cast<long>(r));
      for (int& x : w) x = perm[x];
      v[perm_rank(w)] += row[r];
    }
    rows.push_back(std::move(v));
  }
  rref(rows);
  return PolySubspace{std::move(nt), std::move(rows)};
}

}  // namespace gpi
