#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "posalg/rat.hpp"

namespace posalg {

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat identity(std::size_t n);
  /// The matrix unit E_ij (0-based indices).
  static Mat unit(std::size_t n, std::size_t i, std::size_t j);
  static Mat from_ints(std::initializer_list<std::initializer_list<long>> rows);
  static Mat diagonal(std::span<const Rat> diag);
  /// The all-ones matrix ee^T.
  static Mat ones(std::size_t n);
  /// Nilpotent Jordan block: ones on the superdiagonal.
  static Mat jordan(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  std::size_t size() const { return entries_.size(); }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rat> entries() const { return entries_; }

  bool is_zero() const;
  bool is_nonnegative() const;
  bool row_is_zero(std::size_t i) const;
  bool col_is_zero(std::size_t j) const;
  Rat trace() const;
  Mat transpose() const;
  Mat power(unsigned k) const;

  /// Submatrix on the given row and column index lists.
  Mat block(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  /// P^T M P for the permutation with perm[new] = old.
  Mat permuted(std::span<const std::size_t> perm) const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(const Rat& scalar);

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator-(Mat a);
Mat operator*(Mat a, const Rat& scalar);
Mat operator*(const Rat& scalar, Mat a);
Mat operator*(const Mat& a, const Mat& b);

/// Exact product; throws ShapeError when a.cols() != b.rows().
Mat mat_mul(const Mat& a, const Mat& b);

/// True iff every entry of a - b is nonnegative.
bool entrywise_ge(const Mat& a, const Mat& b);

/// AB - BA for square matrices of equal size.
Mat commutator(const Mat& a, const Mat& b);

void require_square(const Mat& m, const char* what);
void require_same_shape(const Mat& a, const Mat& b, const char* what);
/// Throws DomainError naming the first negative entry.
void require_nonnegative(const Mat& m, const char* what);

std::string to_string(const Mat& m);

}  // namespace posalg
