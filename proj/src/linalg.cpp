#include "gpi/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpi {

int rref(RatMat& m) {
  if (m.empty()) return 0;
  const int ncols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r) {
      if (!is_zero(m[r][col])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rat inv = 1 / m[rank][col];
    for (int c = col; c < ncols; ++c) m[rank][c] *= inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || is_zero(m[r][col])) continue;
      Rat f = m[r][col];
      for (int c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  m.resize(rank);
  return rank;
}

int rank_of(RatMat m) { return rref(m); }

RatMat nullspace(const RatMat& m, int ncols) {
  RatMat a = m;
  rref(a);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& row : a) {
    for (int c = 0; c < ncols; ++c) {
      if (!is_zero(row[c])) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
    }
  }
  RatMat basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v = zero_vec(ncols);
    v[free] = 1;
    for (size_t r = 0; r < a.size(); ++r) v[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  rref(basis);  // canonical
  return basis;
}

Subspace span_of(int ambient, RatMat vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw std::invalid_argument("span_of: vector length mismatch");
  rref(vectors);
  return Subspace{ambient, std::move(vectors)};
}

Subspace zero_subspace(int ambient) { return Subspace{ambient, {}}; }

Subspace full_subspace(int ambient) {
  RatMat id;
  for (int i = 0; i < ambient; ++i) {
    RatVec v = zero_vec(ambient);
    v[i] = 1;
    id.push_back(std::move(v));
  }
  return Subspace{ambient, std::move(id)};
}

bool subspace_contains(const Subspace& s, const RatVec& v) {
  RatVec w = v;
  // Reduce against the rref rows.
  for (const auto& row : s.basis) {
    int p = -1;
    for (int c = 0; c < s.ambient; ++c) {
      if (!is_zero(row[c])) {
        p = c;
        break;
      }
    }
    if (p < 0 || is_zero(w[p])) continue;
    Rat f = w[p];
    for (int c = p; c < s.ambient; ++c) w[c] -= f * row[c];
  }
  return is_zero_vec(w);
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  for (const auto& row : a.basis)
    if (!subspace_contains(b, row)) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
  RatMat rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return span_of(a.ambient, std::move(rows));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("subspace_intersection: ambient mismatch");
  // Zassenhaus: rref of [A|A; B|0], rows with zero left block carry the
  // intersection in the right block.
  const int n = a.ambient;
  RatMat big;
  for (const auto& r : a.basis) {
    RatVec row = r;
    row.insert(row.end(), r.begin(), r.end());
    big.push_back(std::move(row));
  }
  for (const auto& r : b.basis) {
    RatVec row = r;
    RatVec zeros = zero_vec(n);
    row.insert(row.end(), zeros.begin(), zeros.end());
    big.push_back(std::move(row));
  }
  rref(big);
  RatMat inter;
  for (const auto& row : big) {
    bool left_zero = true;
    for (int c = 0; c < n; ++c) {
      if (!is_zero(row[c])) {
        left_zero = false;
        break;
      }
    }
    if (!left_zero) continue;
    inter.emplace_back(row.begin() + n, row.end());
  }
  return span_of(n, std::move(inter));
}

bool SpanBuilder::add(RatVec v) {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("SpanBuilder: vector length mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (is_zero(v[p])) continue;
    Rat f = v[p];
    for (int c = p; c < ambient_; ++c) v[c] -= f * rows_[r][c];
  }
  int p = -1;
  for (int c = 0; c < ambient_; ++c) {
    if (!is_zero(v[c])) {
      p = c;
      break;
    }
  }
  if (p < 0) return false;
  Rat inv = 1 / v[p];
  for (int c = p; c < ambient_; ++c) v[c] *= inv;
  // Keep rows ordered by pivot column.
  size_t pos = 0;
  while (pos < rows_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

Subspace SpanBuilder::take() {
  RatMat rows = std::move(rows_);
  rref(rows);  // back-eliminate for the canonical form
  rows_.clear();
  pivots_.clear();
  return Subspace{ambient_, std::move(rows)};
}

}  // namespace gpi
