#pragma once

#include <optional>
#include <span>
#include <vector>

#include "posalg/mat.hpp"

namespace posalg {

using Vec = std::vector<Rat>;

/// Row-major flattening; the fixed coordinate order of every span computation.
Vec vectorize(const Mat& m);
Mat unvectorize(std::span<const Rat> v, std::size_t rows, std::size_t cols);

/// Incrementally maintained reduced row echelon form of a growing set of
/// vectors. Each echelon row remembers its expression in terms of the
/// accepted input vectors, so coordinates can be reported against them.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v if it enlarges the span; returns whether it did.
  bool insert(std::span<const Rat> v);
  bool contains(std::span<const Rat> v) const;
  /// Coordinates of v with respect to the accepted vectors, in acceptance order.
  std::optional<Vec> coordinates(std::span<const Rat> v) const;

  /// Echelon rows ordered by pivot column (leftmost pivot first).
  std::vector<Vec> echelon_rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  struct Row {
    Vec v;
    std::size_t pivot;
    Vec combo;  // v as a combination of accepted vectors
  };
  // Reduces v in place; returns the echelon-row multipliers used.
  Vec reduce(Vec& v) const;

  std::size_t dim_;
  std::vector<Row> rows_;  // sorted by pivot
};

struct RrefResult {
  std::vector<Mat> basis;       // reduced echelon basis, reshaped to input shape
  std::size_t rank = 0;
  std::vector<Vec> coords;      // coords[i] expresses input i in `basis`
};

/// Reduced echelon basis of the span of same-shape matrices.
RrefResult rref(std::span<const Mat> vectors);

/// Rank of a list of row vectors of length dim.
std::size_t rank_of(std::span<const Vec> rows, std::size_t dim);

/// Basis of {x : f.x = 0 for all f in functionals}; one vector per free
/// column of the reduced echelon form, ascending.
std::vector<Vec> null_space(std::span<const Vec> functionals, std::size_t dim);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);

}  // namespace posalg
