#pragma once
// Brute-force reference computations shared by the tests and the acceptance
// binary. Deliberately independent of the LP and closure code paths.

#include <algorithm>
#include <vector>

#include "posalg/linalg.hpp"
#include "posalg/mat.hpp"

namespace posalg::oracle {

/// Kernel of a small dense system by Gauss-Jordan on plain vectors.
inline std::vector<Vec> kernel(std::vector<Vec> rows, std::size_t dim) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const Rat f = rows[k][c];
      for (std::size_t j = 0; j < dim; ++j) rows[k][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<Vec> out;
  for (std::size_t free = 0; free < dim; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    Vec v(dim);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

inline bool feasible(const std::vector<Vec>& cons, const Vec& x) {
  for (const auto& c : cons) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += c[i] * x[i];
    if (s < 0) return false;
  }
  return true;
}

/// Extreme rays of the pointed cone {x : c.x >= 0 for all c}: every subset of
/// dim-1 constraints with a one-dimensional kernel gives a candidate +-v.
inline std::vector<Vec> extreme_rays(const std::vector<Vec>& cons, std::size_t dim) {
  std::vector<Vec> rays;
  if (dim == 1) {
    for (int s : {1, -1})
      if (feasible(cons, Vec{Rat(s)})) rays.push_back(Vec{Rat(s)});
    return rays;
  }
  const std::size_t k = dim - 1;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  if (cons.size() < k) return rays;
  while (true) {
    std::vector<Vec> sub;
    for (auto i : pick) sub.push_back(cons[i]);
    const auto ker = kernel(sub, dim);
    if (ker.size() == 1) {
      for (int s : {1, -1}) {
        Vec v = ker[0];
        for (auto& x : v) x *= s;
        if (feasible(cons, v)) rays.push_back(std::move(v));
      }
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == cons.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return rays;
}

/// Rank of a list of vectors by Gaussian elimination.
inline std::size_t rank(const std::vector<Vec>& vs, std::size_t dim) {
  return vs.empty() ? 0 : dim - kernel(vs, dim).size();
}

}  // namespace posalg::oracle
