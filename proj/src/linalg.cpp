#include "posalg/linalg.hpp"

#include <algorithm>

#include "posalg/errors.hpp"

namespace posalg {

Vec vectorize(const Mat& m) { return Vec(m.entries().begin(), m.entries().end()); }

Mat unvectorize(std::span<const Rat> v, std::size_t rows, std::size_t cols) {
  return Mat(rows, cols, Vec(v.begin(), v.end()));
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) continue;
    s += a[i] * b[i];
  }
  return s;
}

namespace {

// v -= f * row, skipping zero entries of row.
void axpy_sub(Vec& v, const Rat& f, const Vec& row) {
  Rat t;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (sgn(row[k]) == 0) continue;
    t = f * row[k];
    v[k] -= t;
  }
}

}  // namespace

Vec SpanBuilder::reduce(Vec& v) const {
  Vec mult(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& f = v[rows_[r].pivot];
    if (sgn(f) == 0) continue;
    mult[r] = f;
    axpy_sub(v, mult[r], rows_[r].v);
  }
  return mult;
}

bool SpanBuilder::insert(std::span<const Rat> input) {
  if (input.size() != dim_) throw ShapeError("SpanBuilder: vector length mismatch");
  Vec v(input.begin(), input.end());
  const Vec mult = reduce(v);
  auto nz = std::find_if(v.begin(), v.end(), [](const Rat& x) { return sgn(x) != 0; });
  if (nz == v.end()) return false;

  const std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
  const std::size_t accepted = rows_.size();  // index of this vector among accepted ones
  // combo of the reduced vector: e_new - sum mult[r] * combo_r
  Vec combo(accepted + 1);
  combo[accepted] = 1;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (sgn(mult[r]) == 0) continue;
    for (std::size_t k = 0; k < rows_[r].combo.size(); ++k) combo[k] -= mult[r] * rows_[r].combo[k];
  }
  const Rat inv = 1 / Rat(*nz);
  for (auto& x : v) x *= inv;
  for (auto& x : combo) x *= inv;

  for (auto& row : rows_) {
    row.combo.resize(accepted + 1);
    const Rat f = row.v[pivot];
    if (sgn(f) == 0) continue;
    axpy_sub(row.v, f, v);
    axpy_sub(row.combo, f, combo);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, Row{std::move(v), pivot, std::move(combo)});
  return true;
}

bool SpanBuilder::contains(std::span<const Rat> input) const {
  if (input.size() != dim_) throw ShapeError("SpanBuilder: vector length mismatch");
  Vec v(input.begin(), input.end());
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

std::optional<Vec> SpanBuilder::coordinates(std::span<const Rat> input) const {
  if (input.size() != dim_) throw ShapeError("SpanBuilder: vector length mismatch");
  Vec v(input.begin(), input.end());
  const Vec mult = reduce(v);
  if (!std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; })) return std::nullopt;
  Vec coords(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (sgn(mult[r]) == 0) continue;
    for (std::size_t k = 0; k < rows_[r].combo.size(); ++k) coords[k] += mult[r] * rows_[r].combo[k];
  }
  return coords;
}

std::vector<Vec> SpanBuilder::echelon_rows() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.v);
  return out;
}

std::vector<std::size_t> SpanBuilder::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows_) out.push_back(r.pivot);
  return out;
}

RrefResult rref(std::span<const Mat> vectors) {
  RrefResult result;
  if (vectors.empty()) return result;
  const std::size_t rows = vectors.front().rows();
  const std::size_t cols = vectors.front().cols();
  SpanBuilder span(rows * cols);
  for (const auto& m : vectors) {
    require_same_shape(m, vectors.front(), "rref");
    span.insert(m.entries());
  }
  const auto echelon = span.echelon_rows();
  const auto pivots = span.pivots();
  result.rank = echelon.size();
  for (const auto& row : echelon) result.basis.push_back(unvectorize(row, rows, cols));
  // In reduced echelon form the coordinate on row r is the entry at its pivot.
  for (const auto& m : vectors) {
    Vec c(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) c[r] = m.entries()[pivots[r]];
    result.coords.push_back(std::move(c));
  }
  return result;
}

std::size_t rank_of(std::span<const Vec> rows, std::size_t dim) {
  SpanBuilder span(dim);
  for (const auto& r : rows) span.insert(r);
  return span.rank();
}

std::vector<Vec> null_space(std::span<const Vec> functionals, std::size_t dim) {
  SpanBuilder span(dim);
  for (const auto& f : functionals) span.insert(f);
  const auto echelon = span.echelon_rows();
  const auto pivots = span.pivots();
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vec x(dim);
    x[free] = 1;
    for (std::size_t r = 0; r < echelon.size(); ++r) x[pivots[r]] = -echelon[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace posalg
